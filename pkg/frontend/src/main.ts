import { ApiClient, ApiError } from "./api";
import { boardMarkup, panelMarkup } from "./board";
import { Session } from "./state";

const params = new URLSearchParams(location.search);
const api = new ApiClient(params.get("api") ?? "http://localhost:8787");

const boardEl = document.getElementById("board") as HTMLDivElement;
const panelEl = document.getElementById("panel") as HTMLDivElement;
const historyEl = document.getElementById("history") as HTMLOListElement;
const errorEl = document.getElementById("error") as HTMLDivElement;
const newGameBtn = document.getElementById("new-game") as HTMLButtonElement;
const sizeInput = document.getElementById("size") as HTMLSelectElement;
const seedInput = document.getElementById("seed") as HTMLInputElement;
const hintToggle = document.getElementById("hints") as HTMLInputElement;

let session: Session | null = null;

function render(): void {
  if (!session) return;
  boardEl.innerHTML = boardMarkup(
    session.state,
    session.hintsOn ? session.lastHint : null,
    session.busy,
  );
  panelEl.innerHTML = panelMarkup(session.state, session.sigmaSoFar(), session.announcement());
  historyEl.innerHTML = session.history
    .map((h) => `<li>${h.player} marked value ${h.value}</li>`)
    .join("");
}

function showError(text: string): void {
  errorEl.textContent = text;
  errorEl.hidden = text === "";
}

async function refreshHint(): Promise<void> {
  if (!session || !session.hintsOn || session.state.status !== "in_progress") return;
  try {
    session.lastHint = await api.hint(session.state.id);
  } catch (e) {
    showError(e instanceof ApiError ? e.message : String(e));
  }
  render();
}

newGameBtn.addEventListener("click", async () => {
  showError("");
  const n = parseInt(sizeInput.value, 10);
  const seedRaw = seedInput.value.trim();
  try {
    const res = await api.newGame(n, seedRaw === "" ? undefined : parseInt(seedRaw, 10));
    session = new Session(res.state);
    session.hintsOn = hintToggle.checked;
    render();
    await refreshHint();
  } catch (e) {
    showError(e instanceof ApiError ? e.message : String(e));
  }
});

hintToggle.addEventListener("change", async () => {
  if (!session) return;
  session.hintsOn = hintToggle.checked;
  render();
  await refreshHint();
});

boardEl.addEventListener("click", async (ev) => {
  const target = (ev.target as Element).closest("[data-node]");
  if (!target || !session) return;
  const node = parseInt(target.getAttribute("data-node") ?? "-1", 10);
  if (!session.canPlay(node)) return;
  session.busy = true;
  render();
  try {
    const next = await api.move(session.state.id, node);
    session.busy = false;
    session.applyMove(node, next);
    showError("");
    render();
    await refreshHint();
  } catch (e) {
    session.busy = false;
    render();
    showError(e instanceof ApiError ? e.message : String(e));
  }
});
