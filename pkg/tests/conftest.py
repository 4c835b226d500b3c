"""Shared fixtures: canned problems, mock oracles, a stub chat-completions server."""

from __future__ import annotations

import json
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

import pytest

from noveltot.core import Atom, State, atom
from noveltot.domains import blocksworld_generate, ground_blocksworld, load_domain, load_lexicon
from noveltot.iw.search import optimal_plan_bfs
from noveltot.oracles.base import OracleReply, OracleSet, TokenUsage
from noveltot.pddl import ground, parse_problem
from noveltot.spaces import GroundSpace

THREE_BLOCK_PROBLEM = """
(define (problem tower3)
  (:domain blocksworld)
  (:objects a b c)
  (:init (ontable a) (on b a) (on c b) (clear c) (handempty))
  (:goal (on a b)))
"""


@pytest.fixture(scope="session")
def bw_domain():
    return load_domain("blocksworld")


@pytest.fixture(scope="session")
def bw_lexicon():
    return load_lexicon("blocksworld")


@pytest.fixture(scope="session")
def tower3(bw_domain):
    return ground(bw_domain, parse_problem(THREE_BLOCK_PROBLEM))


@pytest.fixture()
def one_block(bw_domain):
    text = """
    (define (problem one)
      (:domain blocksworld)
      (:objects a)
      (:init (ontable a) (clear a) (handempty))
      (:goal (holding a)))
    """
    return ground(bw_domain, parse_problem(text))


def make_solvable_instances(n, blocks, min_len=1, max_len=8, max_goal_atoms=2, base_seed=0):
    """Seeded ground instances filtered by optimal plan length."""
    out, seed = [], 0
    while len(out) < n:
        seed += 1
        problem = blocksworld_generate(blocks, base_seed * 7919 + seed,
                                       max_goal_atoms=max_goal_atoms)
        gp = ground_blocksworld(problem)
        plan = optimal_plan_bfs(gp)
        if plan is not None and min_len <= len(plan) <= max_len:
            out.append((problem.name, gp, len(plan)))
        assert seed < 20000, "instance generation exhausted"
    return out


# ---------------------------------------------------------------------------
# Mock oracles with fixed token usage (for accounting and engine tests)
# ---------------------------------------------------------------------------


class ScriptedDirectOracle:
    """Returns scripted texts per (node depth, sample index)."""

    def __init__(self, script, usage=TokenUsage(7, 3)):
        self.script = script  # dict[(depth, i)] -> text, or callable(node, i)
        self.usage = usage

    def sample(self, node, i):
        if callable(self.script):
            text = self.script(node, i)
        else:
            text = self.script.get((node.depth, i), "")
        if not text:
            return OracleReply(error="no sample", usage=self.usage)
        return OracleReply(text=text, usage=self.usage)


class ScriptedVerifier:
    """Marks exactly the given contents as goals."""

    def __init__(self, goals, usage=TokenUsage(5, 1)):
        self.goals = set(goals)
        self.usage = usage

    def check(self, node, task=None):
        verdict = "goal" if node.content in self.goals else "continue"
        return OracleReply(text="yes" if verdict == "goal" else "no",
                           verdict=verdict, usage=self.usage)


class ScriptedNovelty:
    def __init__(self, prune_contents=(), usage=TokenUsage(11, 1), verdicts=None):
        self.prune = set(prune_contents)
        self.usage = usage
        self.verdicts = verdicts  # optional callable(node, history) -> verdict

    def judge(self, node, history):
        if self.verdicts is not None:
            verdict = self.verdicts(node, history)
        else:
            verdict = "no" if node.content in self.prune else "yes"
        return OracleReply(text=verdict, verdict=verdict, usage=self.usage)


def mock_oracle_set(script, goals, prune=(), usage=TokenUsage(7, 3)) -> OracleSet:
    return OracleSet(
        name="mock",
        direct=ScriptedDirectOracle(script, usage),
        verifier=ScriptedVerifier(goals),
        novelty=ScriptedNovelty(prune),
    )


# ---------------------------------------------------------------------------
# Stub chat-completions server
# ---------------------------------------------------------------------------


class StubLLMServer:
    """OpenAI-compatible stub. ``plan`` is a list of response descriptors
    consumed per request: {"status": 500} or {"text": ..., "usage": {...}}.
    When the plan runs out, the last descriptor repeats."""

    def __init__(self, plan=None):
        self.plan = list(plan or [{"text": "ok", "usage": {"prompt_tokens": 10,
                                                           "completion_tokens": 5}}])
        self.requests: list[dict] = []
        self._lock = threading.Lock()
        stub = self

        class Handler(BaseHTTPRequestHandler):
            def do_POST(self):
                length = int(self.headers.get("Content-Length", 0))
                body = json.loads(self.rfile.read(length) or b"{}")
                with stub._lock:
                    stub.requests.append(
                        {"path": self.path, "body": body,
                         "auth": self.headers.get("Authorization")}
                    )
                    idx = min(len(stub.requests) - 1, len(stub.plan) - 1)
                    desc = stub.plan[idx]
                status = desc.get("status", 200)
                if status != 200:
                    self.send_response(status)
                    self.end_headers()
                    self.wfile.write(b"{}")
                    return
                payload = {
                    "id": "stub",
                    "choices": [{"message": {"role": "assistant",
                                             "content": desc.get("text", "")}}],
                }
                if "usage" in desc:
                    payload["usage"] = desc["usage"]
                data = json.dumps(payload).encode()
                self.send_response(200)
                self.send_header("Content-Type", "application/json")
                self.send_header("Content-Length", str(len(data)))
                self.end_headers()
                self.wfile.write(data)

            def log_message(self, *args):
                pass

        self.server = ThreadingHTTPServer(("127.0.0.1", 0), Handler)
        self.thread = threading.Thread(target=self.server.serve_forever, daemon=True)

    @property
    def endpoint(self) -> str:
        host, port = self.server.server_address
        return f"http://{host}:{port}/v1"

    def __enter__(self):
        self.thread.start()
        return self

    def __exit__(self, *exc):
        self.server.shutdown()
        self.server.server_close()


@pytest.fixture()
def stub_server():
    def factory(plan=None):
        return StubLLMServer(plan)

    return factory
