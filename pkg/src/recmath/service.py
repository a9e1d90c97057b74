"""HTTP facade: game sessions for interactive play plus render/solve endpoints.

Stateless except for the in-memory session store. Error bodies always
carry a machine `code` and a human `message`; the codes are part of
the API contract.
"""

from __future__ import annotations

import json
import secrets
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles

from . import curves, games, lsystem, numerics, puzzles, turtle

MAX_POINTS = 2000
MAX_ORDER = 12
MAX_SAMPLES = 100_000
DEFAULT_TTL_SECONDS = 3600.0


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def bad_request(message: str) -> ApiError:
    return ApiError(400, "BAD_REQUEST", message)


def out_of_range(message: str) -> ApiError:
    return ApiError(422, "PARAMETER_OUT_OF_RANGE", message)


@dataclass
class Session:
    id: str
    kind: str  # "nim" | "make"
    human_side: str  # "First" | "Second"
    heaps: games.Heaps | None = None
    game: games.SubtractionGame | None = None
    remaining: int = 0
    move_log: list = field(default_factory=list)
    finished: bool = False
    winner: str | None = None
    created_at: float = 0.0
    last_touched: float = 0.0

    def state_json(self) -> dict:
        if self.kind == "nim":
            return {"heaps": list(self.heaps.counts)}
        return {
            "remaining": self.remaining,
            "target": self.game.target,
            "moves": sorted(self.game.moves),
        }


class SessionStore:
    def __init__(self, ttl_seconds: float, snapshot_path: str | None = None):
        self._lock = threading.Lock()
        self._sessions: dict[str, Session] = {}
        self._ttl = ttl_seconds
        self._snapshot_path = snapshot_path

    def put(self, session: Session):
        with self._lock:
            self._sessions[session.id] = session

    def get(self, session_id: str, now: float | None = None) -> Session:
        now = time.monotonic() if now is None else now
        with self._lock:
            session = self._sessions.get(session_id)
            if session is None or now - session.last_touched > self._ttl:
                self._sessions.pop(session_id, None)
                raise ApiError(404, "UNKNOWN_SESSION", f"no session {session_id!r}")
            session.last_touched = now
            return session

    def snapshot(self, session: Session, event: str):
        if self._snapshot_path is None:
            return
        record = {
            "event": event,
            "id": session.id,
            "kind": session.kind,
            "state": session.state_json(),
            "finished": session.finished,
            "winner": session.winner,
        }
        with self._lock:
            with open(self._snapshot_path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(record, sort_keys=True) + "\n")


def _engine_turn(session: Session) -> dict | None:
    """Let the engine move if the game is live; returns the move JSON."""
    if session.finished:
        return None
    if session.kind == "nim":
        move = games.engine_nim_move(session.heaps)
        if move is None:
            return None
        session.heaps = games.apply_move(session.heaps, move)
        move_json = {"heapIndex": move.heap_index, "take": move.take}
        if session.heaps.terminal:
            session.finished = True
            session.winner = "engine"
    else:
        amount = games.engine_subtraction_move(session.game, session.remaining)
        if amount is None:
            return None
        session.remaining -= amount
        move_json = {"amount": amount}
        if session.remaining == 0:
            session.finished = True
            session.winner = "engine"
    session.move_log.append({"by": "engine", "move": move_json})
    return move_json


def _apply_human_move(session: Session, body: dict):
    if session.kind == "nim":
        if "heapIndex" not in body or "take" not in body:
            raise ApiError(422, "ILLEGAL_MOVE", "nim move needs heapIndex and take")
        try:
            move = games.NimMove(int(body["heapIndex"]), int(body["take"]))
            session.heaps = games.apply_move(session.heaps, move)
        except (games.IllegalMove, ValueError) as exc:
            raise ApiError(422, "ILLEGAL_MOVE", str(exc))
        move_json = {"heapIndex": move.heap_index, "take": move.take}
        if session.heaps.terminal:
            session.finished = True
            session.winner = "human"
    else:
        if "amount" not in body:
            raise ApiError(422, "ILLEGAL_MOVE", "subtraction move needs amount")
        amount = int(body["amount"])
        if amount not in session.game.moves or amount > session.remaining:
            raise ApiError(422, "ILLEGAL_MOVE", f"cannot remove {amount}")
        session.remaining -= amount
        move_json = {"amount": amount}
        if session.remaining == 0:
            session.finished = True
            session.winner = "human"
    session.move_log.append({"by": "human", "move": move_json})


def _session_response(session: Session, engine_move: dict | None) -> dict:
    if session.kind == "nim":
        analysis = games.analyze_nim(session.heaps)
    else:
        remaining_game = games.SubtractionGame(session.remaining, session.game.moves) \
            if session.remaining > 0 else None
        analysis = (
            games.analyze_subtraction(remaining_game)
            if remaining_game is not None
            else games.GameAnalysis("Second", 0, ())
        )
    return {
        "id": session.id,
        "kind": session.kind,
        "humanSide": session.human_side,
        "state": session.state_json(),
        "turn": "over" if session.finished else "human",
        "outcome": analysis.outcome,
        "grundy": analysis.grundy,
        "engineMove": engine_move,
        "finished": session.finished,
        "winner": session.winner,
        "moveLog": list(session.move_log),
    }


def _svg_response(drawing: turtle.Drawing) -> Response:
    return Response(turtle.emit_svg(drawing), media_type="image/svg+xml")


def _points_response(drawing: turtle.Drawing) -> JSONResponse:
    points = [[[round(x, 9), round(y, 9)] for x, y in poly] for poly in drawing.polylines]
    return JSONResponse({"points": points})


def create_app(
    ttl_seconds: float = DEFAULT_TTL_SECONDS,
    snapshot_path: str | None = None,
    ui_dir: str | None = None,
) -> FastAPI:
    app = FastAPI(title="recmath", docs_url=None, redoc_url=None)
    store = SessionStore(ttl_seconds, snapshot_path)
    app.state.store = store

    @app.exception_handler(ApiError)
    async def handle_api_error(_: Request, exc: ApiError):
        return JSONResponse(
            {"code": exc.code, "message": exc.message}, status_code=exc.status
        )

    @app.post("/api/game")
    async def create_game(request: Request):
        body = await request.json()
        kind = body.get("kind")
        human_side = body.get("humanSide", "First")
        if human_side not in ("First", "Second"):
            raise bad_request("humanSide must be 'First' or 'Second'")
        session = Session(
            id=secrets.token_hex(16),
            kind="",
            human_side=human_side,
            created_at=time.monotonic(),
            last_touched=time.monotonic(),
        )
        if kind == "nim":
            heaps = body.get("heaps")
            if not isinstance(heaps, list) or not heaps:
                raise bad_request("nim needs a non-empty heaps list")
            try:
                session.heaps = games.Heaps(tuple(int(c) for c in heaps))
            except (TypeError, ValueError) as exc:
                raise bad_request(str(exc))
            session.kind = "nim"
            session.finished = session.heaps.terminal
        elif kind in ("make", "subtraction"):
            try:
                target = int(body.get("target"))
                moves = frozenset(int(s) for s in body.get("moves", [1, 2]))
                session.game = games.SubtractionGame(target, moves)
            except (TypeError, ValueError) as exc:
                raise bad_request(str(exc))
            session.kind = "make"
            session.remaining = target
            session.finished = target == 0
        else:
            raise bad_request("kind must be 'nim' or 'make'")
        engine_move = None
        if human_side == "Second":
            engine_move = _engine_turn(session)
        store.put(session)
        store.snapshot(session, "create")
        return _session_response(session, engine_move)

    @app.get("/api/game/{session_id}")
    async def get_game(session_id: str):
        session = store.get(session_id)
        return _session_response(session, None)

    @app.post("/api/game/{session_id}/move")
    async def move(session_id: str, request: Request):
        session = store.get(session_id)
        if session.finished:
            raise ApiError(409, "NOT_YOUR_TURN", "game is over")
        body = await request.json()
        _apply_human_move(session, body)
        engine_move = _engine_turn(session)
        store.snapshot(session, "move")
        return _session_response(session, engine_move)

    @app.get("/api/render/modular-chords")
    async def render_modular(n: int, k: int, format: str = "svg"):
        if not 2 <= n <= MAX_POINTS:
            raise out_of_range(f"n must be in [2, {MAX_POINTS}]")
        if k < 0:
            raise out_of_range("k must be non-negative")
        drawing = curves.chord_drawing(curves.modular_chords(n, k))
        if format == "points":
            return _points_response(drawing)
        return _svg_response(drawing)

    @app.get("/api/render/curve")
    async def render_curve(
        kind: str, samples: int = 720, r: float = 1.0, R: float = 1.0,
        format: str = "svg",
    ):
        if not 2 <= samples <= MAX_SAMPLES:
            raise out_of_range(f"samples must be in [2, {MAX_SAMPLES}]")
        try:
            if kind == "cardioid":
                curve = curves.Cardioid()
            elif kind == "cycloid":
                curve = curves.Cycloid(r)
            elif kind == "epicycloid":
                curve = curves.Epicycloid(R, r)
            else:
                raise out_of_range(f"unknown curve kind {kind!r}")
        except ValueError as exc:
            raise out_of_range(str(exc))
        drawing = curves.sample_parametric(curve, samples)
        if format == "points":
            return _points_response(drawing)
        return _svg_response(drawing)

    @app.get("/api/render/stitch")
    async def render_stitch(n: int, style: str = "perpendicular", format: str = "svg"):
        if not 2 <= n <= MAX_POINTS:
            raise out_of_range(f"n must be in [2, {MAX_POINTS}]")
        try:
            drawing = curves.stitch_drawing(n, style)
        except ValueError as exc:
            raise out_of_range(str(exc))
        if format == "points":
            return _points_response(drawing)
        return _svg_response(drawing)

    @app.post("/api/render/lsystem")
    async def render_lsystem(request: Request):
        body = await request.json()
        preset = body.get("preset")
        text = lsystem.PRESETS.get(preset) if preset else body.get("text")
        if not text:
            raise ApiError(422, "INVALID_SYSTEM", "no L-system text or known preset")
        order = int(body.get("order", 4))
        if not 0 <= order <= MAX_ORDER:
            raise out_of_range(f"order must be in [0, {MAX_ORDER}]")
        step = float(body.get("step", 10.0))
        angle = body.get("angle")
        try:
            system = lsystem.parse(text)
            spec = lsystem.RenderSpec(
                order=order, step=step,
                angle=float(angle) if angle is not None else None,
            )
            commands = lsystem.compile(system, spec)
            drawing, _ = turtle.interpret(commands)
        except lsystem.LSystemError as exc:
            raise ApiError(422, "INVALID_SYSTEM", str(exc))
        except (ValueError, turtle.UnbalancedPop) as exc:
            raise ApiError(422, "INVALID_SYSTEM", str(exc))
        if body.get("format") == "points":
            return _points_response(drawing)
        return _svg_response(drawing)

    @app.get("/api/puzzle/{name}")
    async def puzzle(name: str, n: int = 8):
        if n < 1 or n > 100:
            raise out_of_range("n must be in [1, 100]")
        if name == "squares":
            return {"name": name, "n": n, "count": puzzles.count_subsquares(n)}
        if name == "rooks":
            return {"name": name, "n": n, "count": puzzles.count_rook_placements(n)}
        if name == "triangles":
            return {"name": name, "n": n, "count": puzzles.count_triangles(n)}
        if name == "ants":
            return {"name": name, "worstCaseMinutes": puzzles.worst_case_clear_time(1.0, 1.0)}
        raise ApiError(404, "UNKNOWN_PUZZLE", f"no puzzle {name!r}")

    @app.get("/api/estimate/pi")
    async def estimate_pi(
        drops: int = 100_000, seed: int = 0, length: float = 1.0, spacing: float = 1.0
    ):
        try:
            spec = numerics.NeedleSpec(length, spacing, drops, seed)
        except ValueError as exc:
            raise out_of_range(str(exc))
        if drops > 10_000_000:
            raise out_of_range("drops must be at most 10^7")
        try:
            estimate, crossings = numerics.buffon_estimate(spec)
        except numerics.EstimateUndefined:
            return {"estimate": None, "crossings": 0}
        return {"estimate": estimate, "crossings": crossings}

    if ui_dir and Path(ui_dir).is_dir():
        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
