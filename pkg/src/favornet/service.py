"""HTTP service hosting live human-vs-computer game sessions.

One human occupies a node (by default a highest-degree one) and plays
against equilibrium computer players under a per-turn decision deadline;
a missed deadline counts as keep, applied exactly once.  Views expose the
current graph only: no turn schedule, no decision history of the other
players.

Endpoints (JSON bodies; schemas in README):

* ``POST /sessions`` {network, seed?, human_node?, b?, c?, timeout?,
  randomize_tie?} -> session view
* ``GET /sessions/{id}`` -> view
* ``POST /sessions/{id}/decision`` {action: "keep"|"delete", edge?} ->
  {applied, reason, view}
* ``GET /sessions/{id}/events`` -> server-sent events ``your_turn`` /
  ``finished`` (``?once=true`` emits the current state and closes)

Deadline expiry is evaluated lazily under the session lock on every
access, so concurrent polls cannot double-apply the auto-keep.  Finished
sessions can be appended to a JSONL file for later ratio analysis.
"""

from __future__ import annotations

import json
import logging
import os
import secrets
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, StreamingResponse

from .agents import equilibrium_agent
from .catalog import UnknownNetworkError, catalog, graph_from_dict, graph_to_dict
from .engine import (
    Decision,
    EngineError,
    GameConfig,
    GameState,
    InvalidDecisionError,
    apply_decision,
    new_game,
    next_player,
    payoffs,
)
from .graph import Graph
from .rng import derive_stream

log = logging.getLogger("favornet.service")
logging.basicConfig(level=os.environ.get("FAVORNET_LOG", "WARNING").upper())


class ServiceError(Exception):
    def __init__(self, status: int, message: str) -> None:
        super().__init__(message)
        self.status = status
        self.message = message


@dataclass
class Session:
    id: str
    name: str
    state: GameState
    human: int
    timeout: float
    status: str = "awaiting_human"  # awaiting_human | finished
    deadline: float | None = None
    your_turn_index: int = 0
    auto_keeps: list[int] = field(default_factory=list)
    lock: threading.RLock = field(default_factory=threading.RLock)
    agent_m: int = 2
    _policies: dict[int, object] = field(default_factory=dict)

    def advance(self) -> None:
        """Run computer turns until the human is up or the game ends."""
        state = self.state
        while not state.terminal:
            player = next_player(state)
            if player == self.human:
                self.status = "awaiting_human"
                self.deadline = time.time() + self.timeout
                self.your_turn_index += 1
                return
            decision = self._policies[player](state.graph, player)
            apply_decision(state, player, decision)
        self.status = "finished"
        self.deadline = None

    def expire_if_due(self) -> bool:
        """Apply the auto-keep once if the human's deadline has passed."""
        if self.status != "awaiting_human" or self.deadline is None:
            return False
        if time.time() <= self.deadline:
            return False
        apply_decision(self.state, self.human, Decision.keep())
        self.auto_keeps.append(self.state.turn)
        self.deadline = None
        self.advance()
        return True

    def view(self) -> dict:
        now = time.time()
        finished = self.status == "finished"
        return {
            "session": self.id,
            "status": self.status,
            "graph": graph_to_dict(self.state.graph),
            "your_node": self.human,
            "your_turn": self.status == "awaiting_human",
            "your_turn_index": self.your_turn_index,
            "deadline": self.deadline,
            "seconds_left": max(0.0, self.deadline - now) if self.deadline else None,
            "history_visibility": "none",
            "payoffs": list(payoffs(self.state)) if finished else None,
        }


class SessionStore:
    def __init__(self, persist: str | Path | None = None, agent_m: int = 2) -> None:
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()
        self._persist = Path(persist) if persist else None
        self._persist_lock = threading.Lock()
        self.agent_m = agent_m

    def create(
        self,
        network: object,
        seed: int | None = None,
        human_node: int | None = None,
        b: int = 100,
        c: int = 110,
        timeout: float = 60.0,
        randomize_tie: bool = False,
    ) -> Session:
        name, graph = self._resolve(network)
        if seed is None:
            seed = secrets.randbits(63)
        if human_node is not None and not 0 <= human_node < graph.n:
            raise ServiceError(400, f"human_node {human_node} outside 0..{graph.n - 1}")
        try:
            cfg = GameConfig(b=b, c=c, seed=seed, decision_timeout=timeout)
        except ValueError as exc:
            raise ServiceError(400, str(exc)) from exc
        human = human_node if human_node is not None else _default_human(graph, seed, randomize_tie)

        state = new_game(graph, cfg)
        sid = secrets.token_hex(8)
        spec = equilibrium_agent(m=self.agent_m)
        session = Session(
            id=sid,
            name=name,
            state=state,
            human=human,
            timeout=timeout,
            agent_m=self.agent_m,
            _policies={
                node: spec.make_policy(seed, node) for node in range(graph.n)
            },
        )
        with session.lock:
            if state.terminal:
                session.status = "finished"
            else:
                session.advance()
            if session.status == "finished":
                self._persist_finished(session)
        with self._lock:
            self._sessions[sid] = session
        return session

    def _resolve(self, network: object) -> tuple[str, Graph]:
        if isinstance(network, str):
            try:
                entry = catalog(network)
            except UnknownNetworkError as exc:
                raise ServiceError(400, str(exc)) from exc
            return entry.name, entry.graph
        try:
            return "inline", graph_from_dict(network)
        except ValueError as exc:
            raise ServiceError(400, f"bad network: {exc}") from exc

    def get(self, sid: str) -> Session:
        with self._lock:
            session = self._sessions.get(sid)
        if session is None:
            raise ServiceError(404, f"unknown session {sid!r}")
        return session

    def submit(self, sid: str, doc: dict) -> dict:
        session = self.get(sid)
        with session.lock:
            if session.expire_if_due():
                if session.status == "finished":
                    self._persist_finished(session)
                return {
                    "applied": False,
                    "reason": "deadline_expired",
                    "view": session.view(),
                }
            if session.status == "finished":
                raise ServiceError(409, "session is finished")
            decision = _parse_decision(doc, session.human)
            try:
                apply_decision(session.state, session.human, decision)
            except InvalidDecisionError as exc:
                raise ServiceError(400, str(exc)) from exc
            except EngineError as exc:
                raise ServiceError(409, str(exc)) from exc
            session.deadline = None
            session.advance()
            if session.status == "finished":
                self._persist_finished(session)
            return {"applied": True, "reason": None, "view": session.view()}

    def snapshot(self, sid: str) -> dict:
        session = self.get(sid)
        with session.lock:
            if session.expire_if_due() and session.status == "finished":
                self._persist_finished(session)
            return session.view()

    def _persist_finished(self, session: Session) -> None:
        if self._persist is None:
            return
        record = {
            "session": session.id,
            "network": session.name,
            "seed": session.state.config.seed,
            "human_node": session.human,
            "payoffs": list(payoffs(session.state)),
            "auto_keeps": session.auto_keeps,
            "trace": [json.loads(ev.to_json()) for ev in session.state.trace],
            "meta": session.state.meta,
        }
        with self._persist_lock:
            with self._persist.open("a") as fh:
                fh.write(json.dumps(record, separators=(",", ":")) + "\n")


def _default_human(graph: Graph, seed: int, randomize_tie: bool) -> int:
    deg = graph.degrees()
    top = max(deg)
    candidates = [i for i, d in enumerate(deg) if d == top]
    if randomize_tie and len(candidates) > 1:
        return candidates[derive_stream(seed, 0x45169).randbelow(len(candidates))]
    return candidates[0]


def _parse_decision(doc: object, human: int) -> Decision:
    if not isinstance(doc, dict) or "action" not in doc:
        raise ServiceError(400, 'decision must be {"action": "keep"|"delete", "edge"?: [i, j]}')
    action = doc["action"]
    if action == "keep":
        return Decision.keep()
    if action == "delete":
        edge = doc.get("edge")
        if (
            not isinstance(edge, list)
            or len(edge) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in edge)
        ):
            raise ServiceError(400, "delete needs an edge: [i, j]")
        if human not in edge:
            raise ServiceError(400, f"edge {edge} is not incident to your node {human}")
        return Decision.delete(edge[0], edge[1])
    raise ServiceError(400, f"unknown action {action!r}")


def create_app(
    persist: str | Path | None = None,
    agent_m: int = 2,
    static_dir: str | Path | None = None,
) -> FastAPI:
    app = FastAPI(title="favornet session service")
    store = SessionStore(persist=persist, agent_m=agent_m)
    app.state.store = store

    @app.exception_handler(ServiceError)
    async def _service_error(_req: Request, exc: ServiceError) -> JSONResponse:
        return JSONResponse(status_code=exc.status, content={"error": exc.message})

    @app.post("/sessions", status_code=201)
    async def create_session(body: dict) -> dict:
        if "network" not in body:
            raise ServiceError(400, "body needs a 'network' (catalog name or graph object)")
        session = store.create(
            network=body["network"],
            seed=body.get("seed"),
            human_node=body.get("human_node"),
            b=body.get("b", 100),
            c=body.get("c", 110),
            timeout=body.get("timeout", 60.0),
            randomize_tie=bool(body.get("randomize_tie", False)),
        )
        log.info("session %s created on %s (human node %d)", session.id, session.name, session.human)
        return store.snapshot(session.id)

    @app.get("/sessions/{sid}")
    async def get_session(sid: str) -> dict:
        return store.snapshot(sid)

    @app.post("/sessions/{sid}/decision")
    async def decide(sid: str, body: dict) -> dict:
        return store.submit(sid, body)

    @app.get("/sessions/{sid}/events")
    async def events(sid: str, once: bool = False):
        store.get(sid)  # 404 before the stream starts

        def stream():
            last: tuple[str, int] | None = None
            while True:
                view = store.snapshot(sid)
                key = (view["status"], view["your_turn_index"])
                if key != last:
                    last = key
                    event = "finished" if view["status"] == "finished" else "your_turn"
                    yield f"event: {event}\ndata: {json.dumps(view)}\n\n"
                    if view["status"] == "finished" or once:
                        return
                yield ": ping\n\n"
                time.sleep(0.2)

        return StreamingResponse(stream(), media_type="text/event-stream")

    if static_dir is not None and Path(static_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app
