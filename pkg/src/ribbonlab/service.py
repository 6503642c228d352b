"""HTTP JSON API over the solver, the oracle and the marking game."""
from __future__ import annotations

import random
import time
import uuid
from dataclasses import dataclass, field
from typing import Optional, Union

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import core, enumeration, oracle, solver

GAME_TTL = 3600.0
EXACT_GAME_MAX = 8


class ApiError(Exception):
    def __init__(self, status, code, message):
        self.status = status
        self.code = code
        self.message = message


# ----------------------------------------------------------------- game

@dataclass
class Game:
    id: str
    values: tuple
    marks: list  # 0 = unmarked
    to_move: str = "A"
    touched: float = field(default_factory=time.time)

    @property
    def n(self):
        return len(self.values)

    @property
    def finished(self):
        return 0 not in self.marks

    def pools(self):
        placed_neg = sum(1 for m in self.marks if m < 0)
        placed_pos = sum(1 for m in self.marks if m > 0) - 2
        half = self.n // 2 - 1
        return {"A": half - placed_neg, "B": half - placed_pos}

    def result(self):
        if not self.finished:
            return None
        a = core.new_ribbon(self.values, self.marks)
        g = solver.gamma(a)
        return {"winner": "A" if g else "B", "gamma": g}

    def to_json(self):
        out = {
            "id": self.id,
            "permutation": list(self.values),
            "marks": list(self.marks),
            "to_move": self.to_move,
            "pools": self.pools(),
            "status": "finished" if self.finished else "in_progress",
        }
        res = self.result()
        if res:
            out.update(res)
        return out


def new_game(n, seed=None):
    if n % 2 or not 4 <= n <= 12:
        raise ApiError(400, "BadN", "n must be even with 4 <= n <= 12")
    values = enumeration.random_zigzag_perm(n, random.Random(seed))
    marks = [0] * n
    marks[values.index(1)] = 1
    marks[values.index(n)] = 1
    return Game(str(uuid.uuid4()), tuple(values), marks)


def play(game, node):
    if game.finished:
        raise ApiError(409, "Finished", "game is over")
    if not 0 <= node < game.n or game.marks[node] != 0:
        raise ApiError(409, "NotYourTurnOrOccupied", "node is not open")
    game.marks[node] = -1 if game.to_move == "A" else 1
    game.to_move = "B" if game.to_move == "A" else "A"
    return game


_minimax_memo = {}


def _mover(values, marks):
    placed = sum(1 for m in marks if m) - 2
    return "A" if placed % 2 == 0 else "B"


def _winner(values, marks):
    """Winner under optimal play from a partial position."""
    key = (values, marks)
    hit = _minimax_memo.get(key)
    if hit is not None:
        return hit
    if 0 not in marks:
        zero, _ = solver.is_gamma_zero(core.new_ribbon(values, marks))
        res = "B" if zero else "A"
    else:
        mover = _mover(values, marks)
        stone = -1 if mover == "A" else 1
        res = "B" if mover == "A" else "A"
        for i, m in enumerate(marks):
            if m == 0:
                child = marks[:i] + (stone,) + marks[i + 1:]
                if _winner(values, child) == mover:
                    res = mover
                    break
    _minimax_memo[key] = res
    return res


def solve_permutation(values):
    """Optimal-play winner on a fresh board for the given permutation."""
    values = tuple(values)
    n = len(values)
    marks = [0] * n
    marks[values.index(1)] = 1
    marks[values.index(n)] = 1
    return _winner(values, tuple(marks))


def hints(game):
    exact = game.n <= EXACT_GAME_MAX
    stone = -1 if game.to_move == "A" else 1
    out = []
    for i, m in enumerate(game.marks):
        if m != 0:
            continue
        if exact:
            child = tuple(game.marks[:i] + [stone] + game.marks[i + 1:])
            out.append({"node": i, "verdict": _winner(game.values, child),
                        "mode": "exact"})
        else:
            near = game.values[i] in (2, game.n - 1) and stone < 0
            out.append({"node": i,
                        "verdict": "A-favorable" if near else "neutral",
                        "mode": "heuristic"})
    return {"to_move": game.to_move, "candidates": out}


# -------------------------------------------------------------- the app

class NewGameBody(BaseModel):
    n: int
    seed: Optional[int] = None


class MoveBody(BaseModel):
    node: int


class RibbonBody(BaseModel):
    ribbon: Union[str, dict]


def _parse(body, n_limit):
    try:
        if isinstance(body.ribbon, str):
            a = core.parse_ribbon(body.ribbon)
        else:
            a = core.ribbon_from_json(body.ribbon)
    except core.RibbonError as e:
        raise ApiError(400, "ParseOrValidation", str(e))
    if a.n > n_limit:
        raise ApiError(422, "TooLarge", "n must be <= %d" % n_limit)
    return a


def create_app():
    app = FastAPI(title="ribbonlab")
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])
    games = {}

    @app.exception_handler(ApiError)
    async def api_error(request: Request, exc: ApiError):
        return JSONResponse(status_code=exc.status,
                            content={"error": exc.code, "message": exc.message})

    def fetch(game_id):
        now = time.time()
        for gid in [g for g, st in games.items() if now - st.touched > GAME_TTL]:
            del games[gid]
        game = games.get(game_id)
        if game is None:
            raise ApiError(404, "UnknownGame", "no such game")
        game.touched = now
        return game

    @app.post("/game/new")
    def game_new(body: NewGameBody):
        game = new_game(body.n, body.seed)
        games[game.id] = game
        return {"id": game.id, "permutation": list(game.values),
                "state": game.to_json()}

    @app.post("/game/{game_id}/move")
    def game_move(game_id: str, body: MoveBody):
        return play(fetch(game_id), body.node).to_json()

    @app.post("/game/{game_id}/hint")
    def game_hint(game_id: str):
        game = fetch(game_id)
        if game.finished:
            raise ApiError(409, "Finished", "game is over")
        return hints(game)

    @app.post("/invariants")
    def invariants(body: RibbonBody):
        a = _parse(body, 12)
        b = solver.invariant_bundle(a)
        return {
            "ribbon": str(a), "gamma": b.gamma, "gamma0": b.gamma0,
            "gamma_ext": b.gamma_ext, "gamma_sad": b.gamma_sad,
            "sigma": b.sigma, "index": b.index,
            "delta": b.delta, "delta0": b.delta0,
            "beta_lower": b.beta_lower, "beta_upper": b.beta_upper,
            "beta_exact": b.beta_exact,
        }

    @app.post("/oracle")
    def oracle_summary(body: RibbonBody):
        a = _parse(body, 8)
        s = oracle.survey(a)
        return {
            "ribbon": str(a),
            "minima": dict(zip(solver.KINDS, s.minima)),
            "count": s.count,
            "by_size": {str(k): v for k, v in sorted(s.by_size.items())},
            "count_minimal": dict(zip(solver.KINDS, s.count_minimal)),
            "compression": s.compression,
            "min_levels": s.min_levels,
        }

    @app.post("/iszero")
    def iszero(body: RibbonBody):
        a = _parse(body, 12)
        zero, witness = solver.is_gamma_zero(a)
        return {"ribbon": str(a), "zero": zero,
                "witness": [list(step) for step in witness] if zero else None,
                "reason": None if zero else witness}

    return app


app = create_app()
