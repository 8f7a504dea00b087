"""The playable dollar game: sessions, moves, hints, and the protocol.

A session holds a complex, a dimension, the current chain, and the move
history.  Moves fire single faces; the degree vector is conserved by
construction and re-asserted on every status report.  Sessions are
immutable values; the engine maps session ids to their latest state.

The wire protocol is line-delimited JSON (one request object per line,
one response object per line) with operations new/move/hint/undo/state/
close.  Hints may take a while, so the stdio server computes them on a
worker thread and keeps serving moves; every hint response carries the
history length it was computed at, and clients must discard stale ones.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, replace

from .complexes import (
    Face,
    FaceRef,
    IntChain,
    SimplicialComplex,
    chain_from_coeffs,
    parse_complex,
)
from .cones import degree, hilbert_basis
from .errors import ChipfireError, InputError, PreconditionError
from .intlinalg import mat_vec
from .jsonio import coerce_int_list
from .complexes import laplacian
from .winnability import is_winnable

LEND = "lend"
BORROW = "borrow"


@dataclass(frozen=True)
class Move:
    face: FaceRef
    kind: str

    def inverse(self) -> "Move":
        return Move(self.face, LEND if self.kind == BORROW else BORROW)


@dataclass(frozen=True)
class GameSession:
    complex: SimplicialComplex
    dim: int
    initial: IntChain
    current: IntChain
    history: tuple[Move, ...]

    @property
    def move_count(self) -> int:
        return len(self.history)


def new_session(complex: SimplicialComplex, dim: int, chain: IntChain) -> GameSession:
    if chain.dim != dim or len(chain) != complex.face_count(dim):
        raise PreconditionError("chain does not match the complex/dimension")
    return GameSession(complex, dim, chain, chain, ())


def _laplacian_column(session: GameSession, index: int) -> list[int]:
    lap = laplacian(session.complex, session.dim)
    return [row[index] for row in lap]


def apply_move(session: GameSession, move: Move) -> GameSession:
    """Fire one face: borrowing adds its Laplacian column, lending
    subtracts it."""
    if move.face.dim != session.dim:
        raise PreconditionError("move dimension does not match the session")
    faces = session.complex.faces(session.dim)
    if move.face.index >= len(faces) or faces[move.face.index] != move.face.vertices:
        raise PreconditionError(f"unknown face {move.face.vertices}")
    column = _laplacian_column(session, move.face.index)
    sign = 1 if move.kind == BORROW else -1
    coeffs = tuple(c + sign * v for c, v in zip(session.current.coeffs, column))
    return replace(
        session,
        current=IntChain(session.dim, coeffs),
        history=session.history + (move,),
    )


def undo(session: GameSession) -> GameSession:
    if not session.history:
        raise PreconditionError("nothing to undo")
    last = session.history[-1]
    backed = apply_move(session, last.inverse())
    return replace(backed, history=session.history[:-1])


def net_firing_vector(session: GameSession) -> tuple[int, ...]:
    net = [0] * session.complex.face_count(session.dim)
    for move in session.history:
        net[move.face.index] += 1 if move.kind == BORROW else -1
    return tuple(net)


def session_status(session: GameSession) -> dict:
    """Status record; recomputes the degree and asserts conservation."""
    basis = hilbert_basis(session.complex, session.dim)
    deg_now = degree(session.complex, session.dim, session.current, basis)
    deg_start = degree(session.complex, session.dim, session.initial, basis)
    assert deg_now == deg_start, "degree must be conserved by moves"
    # cross-check the history against the state
    lap = laplacian(session.complex, session.dim)
    net = net_firing_vector(session)
    replayed = [
        c + v for c, v in zip(session.initial.coeffs, mat_vec(lap, list(net)))
    ]
    assert tuple(replayed) == session.current.coeffs
    return {
        "won": session.current.is_effective(),
        "current": list(session.current.coeffs),
        "degree": list(deg_now),
        "net_firing_vector": list(net),
        "move_count": session.move_count,
    }


def hint(session: GameSession) -> dict:
    """Winnability of the current position plus a move script.

    The script lists single-face moves in lex face order (repeats for
    magnitudes); applying it in full makes the position effective.
    """
    verdict = is_winnable(session.complex, session.dim, session.current)
    record: dict = {
        "winnable": verdict.winnable,
        "history_length": session.move_count,
    }
    if verdict.winnable:
        faces = session.complex.faces(session.dim)
        script = []
        for k, face in enumerate(faces):
            v = verdict.firing_vector[k]
            kind = BORROW if v > 0 else LEND
            for _ in range(abs(v)):
                script.append(Move(FaceRef(session.dim, k, face), kind))
        record["script"] = script
    return record


def face_ref(complex: SimplicialComplex, dim: int, vertices) -> FaceRef:
    face: Face = tuple(sorted(int(v) for v in vertices))
    if len(face) - 1 != dim:
        raise InputError(f"face {list(vertices)} is not {dim}-dimensional")
    return FaceRef(dim, complex.face_index(face), face)


class GameEngine:
    """Session registry speaking the dict-level protocol.

    Thread safety: a lock guards the registry; sessions themselves are
    immutable, so reads never see partial states.  One logical writer per
    session is assumed (the protocol layer serializes moves per session).
    """

    def __init__(self):
        self._sessions: dict[str, GameSession] = {}
        self._lock = threading.Lock()
        self._counter = itertools.count(1)

    def _get(self, request) -> tuple[str, GameSession]:
        sid = request.get("session")
        with self._lock:
            if not isinstance(sid, str) or sid not in self._sessions:
                raise InputError(f"unknown session {sid!r}")
            return sid, self._sessions[sid]

    def handle(self, request: dict) -> dict:
        if not isinstance(request, dict) or "op" not in request:
            raise InputError('request must be an object with an "op" key')
        op = request["op"]
        handlers = {
            "new": self._op_new,
            "move": self._op_move,
            "hint": self._op_hint,
            "undo": self._op_undo,
            "state": self._op_state,
            "close": self._op_close,
        }
        if op not in handlers:
            raise InputError(f"unknown op {op!r}")
        response = handlers[op](request)
        if "id" in request:
            response["id"] = request["id"]
        return response

    def handle_safe(self, request) -> dict:
        try:
            return self.handle(request)
        except ChipfireError as exc:
            out = {"error": str(exc)}
            if isinstance(request, dict) and "id" in request:
                out["id"] = request["id"]
            return out

    def _op_new(self, request) -> dict:
        doc = parse_complex(request.get("complex") or {})
        dim = request.get("dim")
        if dim is None and doc.chain is not None:
            dim = doc.chain.dim
        if dim is None:
            raise InputError('"dim" is required when the file has no chain')
        dim = int(dim)
        if "chain" in request and request["chain"] is not None:
            chain = chain_from_coeffs(doc.complex, dim, coerce_int_list(request["chain"]))
        elif doc.chain is not None and doc.chain.dim == dim:
            chain = doc.chain
        else:
            raise InputError("no starting chain provided")
        session = new_session(doc.complex, dim, chain)
        with self._lock:
            sid = f"s{next(self._counter)}"
            self._sessions[sid] = session
        return {"session": sid, "status": session_status(session)}

    def _op_move(self, request) -> dict:
        sid, session = self._get(request)
        kind = request.get("kind")
        if kind not in (LEND, BORROW):
            raise InputError(f'kind must be "{LEND}" or "{BORROW}"')
        ref = face_ref(session.complex, session.dim, request.get("face") or ())
        updated = apply_move(session, Move(ref, kind))
        with self._lock:
            self._sessions[sid] = updated
        return {"status": session_status(updated)}

    def _op_undo(self, request) -> dict:
        sid, session = self._get(request)
        updated = undo(session)
        with self._lock:
            self._sessions[sid] = updated
        return {"status": session_status(updated)}

    def _op_state(self, request) -> dict:
        _, session = self._get(request)
        return {"status": session_status(session)}

    def _op_hint(self, request) -> dict:
        sid, session = self._get(request)
        record = hint(session)
        out = {
            "winnable": record["winnable"],
            "history_length": record["history_length"],
        }
        if "script" in record:
            out["script"] = [
                {"face": list(m.face.vertices), "kind": m.kind}
                for m in record["script"]
            ]
        with self._lock:
            latest = self._sessions.get(sid)
        if latest is not None and latest.move_count != record["history_length"]:
            out["stale"] = True
        return out

    def _op_close(self, request) -> dict:
        sid, _ = self._get(request)
        with self._lock:
            del self._sessions[sid]
        return {"closed": sid}


def serve_stdio(stdin=None, stdout=None):
    """Line-delimited JSON server on standard streams.

    Hint requests run on a worker thread so they never block moves; the
    response order is therefore not the request order, and clients must
    match responses by the echoed "id".
    """
    import json
    import sys
    from concurrent.futures import ThreadPoolExecutor

    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    engine = GameEngine()
    write_lock = threading.Lock()

    def emit(response):
        from .jsonio import dumps

        with write_lock:
            stdout.write(dumps(response) + "\n")
            stdout.flush()

    with ThreadPoolExecutor(max_workers=2, thread_name_prefix="hint") as pool:
        for line in stdin:
            line = line.strip()
            if not line:
                continue
            try:
                request = json.loads(line)
            except json.JSONDecodeError as exc:
                emit({"error": f"bad json: {exc.msg}"})
                continue
            if isinstance(request, dict) and request.get("op") == "hint":
                pool.submit(lambda req=request: emit(engine.handle_safe(req)))
            else:
                emit(engine.handle_safe(request))
