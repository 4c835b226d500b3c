"""Chat-completions HTTP client and the LLM-backed sub-task oracles.

One wire protocol covers every backend: POST {endpoint}/chat/completions
with {model, messages, temperature, max_tokens, ...}. Thinking mode is a
per-model request-body fragment configured on the params profile. Token
usage comes from the provider's usage fields, falling back to a documented
whitespace-split estimate (flagged in the transcript) when absent.
"""

from __future__ import annotations

import logging
import os
import threading
import time
from dataclasses import dataclass, field

import requests

from .base import (
    CONTINUE,
    GOAL,
    NO,
    UNPARSEABLE,
    YES,
    Completion,
    OracleReply,
    OracleSet,
    OracleUnavailable,
    TokenUsage,
    parse_yes_no,
)
from .prompts import PromptCatalog, history_to_text, render_prompt

logger = logging.getLogger(__name__)

API_KEY_ENV = "NOVELTOT_API_KEY"


class AuthError(Exception):
    """Bad credentials; never retried."""


@dataclass(frozen=True)
class LLMParams:
    endpoint: str
    model: str
    temperature: float = 0.7
    max_tokens: int = 1024
    thinking: bool = False
    max_attempts: int = 3
    backoff_s: float = 0.5
    timeout_s: float = 60.0
    requests_per_minute: int | None = None
    api_key_env: str = API_KEY_ENV
    # request-body fragments merged in depending on the thinking flag
    thinking_on_body: dict = field(default_factory=dict)
    thinking_off_body: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.temperature < 0:
            raise ValueError("temperature must be >= 0")
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be >= 1")
        if not self.model:
            raise ValueError("model name must be non-empty")

    def with_(self, **changes) -> "LLMParams":
        from dataclasses import replace

        return replace(self, **changes)


class RateLimiter:
    """Token bucket over requests per minute; thread-safe, no-op when None."""

    def __init__(self, requests_per_minute: int | None):
        self.rpm = requests_per_minute
        self._lock = threading.Lock()
        self._allowance = float(requests_per_minute or 0)
        self._last = time.monotonic()

    def acquire(self) -> None:
        if not self.rpm:
            return
        while True:
            with self._lock:
                now = time.monotonic()
                self._allowance = min(
                    self.rpm, self._allowance + (now - self._last) * self.rpm / 60.0
                )
                self._last = now
                if self._allowance >= 1.0:
                    self._allowance -= 1.0
                    return
                wait = (1.0 - self._allowance) * 60.0 / self.rpm
            time.sleep(wait)


def _estimate_tokens(text: str) -> int:
    return len(text.split())


def _usage_from_response(data: dict, prompt_text: str, completion_text: str) -> TokenUsage:
    usage = data.get("usage") or {}
    prompt = usage.get("prompt_tokens")
    completion = usage.get("completion_tokens")
    details = usage.get("completion_tokens_details") or {}
    reasoning = details.get("reasoning_tokens", usage.get("reasoning_tokens", 0)) or 0
    estimated = False
    if prompt is None:
        prompt = _estimate_tokens(prompt_text)
        estimated = True
    if completion is None:
        completion = _estimate_tokens(completion_text)
        estimated = True
    return TokenUsage(int(prompt), int(completion), int(reasoning), estimated)


def llm_complete(
    prompt: str,
    params: LLMParams,
    system: str | None = None,
    limiter: RateLimiter | None = None,
    session: requests.Session | None = None,
) -> Completion:
    """One chat-completion round trip with retry/backoff on transport failures.

    Raises AuthError on 401/403 (no retry) and OracleUnavailable once the
    retry budget is exhausted.
    """
    messages = []
    if system:
        messages.append({"role": "system", "content": system})
    messages.append({"role": "user", "content": prompt})
    body = {
        "model": params.model,
        "messages": messages,
        "temperature": params.temperature,
        "max_tokens": params.max_tokens,
    }
    body.update(params.thinking_on_body if params.thinking else params.thinking_off_body)

    headers = {"Content-Type": "application/json"}
    api_key = os.environ.get(params.api_key_env, "")
    if api_key:
        headers["Authorization"] = f"Bearer {api_key}"

    url = params.endpoint.rstrip("/") + "/chat/completions"
    post = (session or requests).post
    last_error = None
    start = time.perf_counter()

    for attempt in range(1, params.max_attempts + 1):
        if limiter is not None:
            limiter.acquire()
        try:
            resp = post(url, json=body, headers=headers, timeout=params.timeout_s)
        except requests.RequestException as exc:
            last_error = f"transport error: {exc}"
        else:
            if resp.status_code in (401, 403):
                raise AuthError(f"authentication failed ({resp.status_code})")
            if resp.status_code >= 500 or resp.status_code == 429:
                last_error = f"server error {resp.status_code}"
            elif resp.status_code != 200:
                raise OracleUnavailable(
                    f"unexpected status {resp.status_code}: {resp.text[:200]}"
                )
            else:
                data = resp.json()
                text = data["choices"][0]["message"]["content"] or ""
                sys_text = system or ""
                usage = _usage_from_response(data, f"{sys_text}\n{prompt}", text)
                latency = (time.perf_counter() - start) * 1000.0
                return Completion(
                    text=text, usage=usage, latency_ms=latency, attempts=attempt, raw=data
                )
        if attempt < params.max_attempts:
            delay = params.backoff_s * (2 ** (attempt - 1))
            logger.warning("llm_complete attempt %d failed (%s); retrying in %.2fs",
                           attempt, last_error, delay)
            time.sleep(delay)

    raise OracleUnavailable(f"{last_error} after {params.max_attempts} attempts")


# ---------------------------------------------------------------------------
# LLM-backed sub-task oracles
# ---------------------------------------------------------------------------


class _LLMOracle:
    def __init__(self, client: "LLMClient", role: str):
        self.client = client
        self.role = role

    def _ask(self, bindings: dict, temperature: float | None = None) -> OracleReply:
        return self.client.ask(self.role, bindings, temperature)


class LLMClient:
    """Catalog + params + transport shared by the four sub-task oracles.

    Transport failures that survive the retry policy raise OracleUnavailable;
    the search engine turns that into a failed(oracle_error) outcome.
    """

    def __init__(
        self,
        params: LLMParams,
        catalog: PromptCatalog,
        style: str,
        domain_context: str,
        temperatures: dict | None = None,
    ):
        self.params = params
        self.catalog = catalog
        self.style = style
        self.domain_context = domain_context
        self.temperatures = temperatures or {}
        self.limiter = RateLimiter(params.requests_per_minute)
        self.session = requests.Session()

    def ask(self, role: str, bindings: dict, temperature: float | None = None) -> OracleReply:
        template = self.catalog.select(role, self.style)
        bindings = {"domain_context": self.domain_context, **bindings}
        prompt = render_prompt(template, bindings)
        params = self.params
        temp = temperature if temperature is not None else self.temperatures.get(role)
        if temp is not None:
            params = params.with_(temperature=temp)
        completion = llm_complete(
            prompt, params, system=self.domain_context or None,
            limiter=self.limiter, session=self.session,
        )
        return OracleReply(
            text=completion.text.strip(),
            usage=completion.usage,
            prompt=prompt,
            system=self.domain_context,
            meta={
                "template": template.id,
                "attempts": completion.attempts,
                "latency_ms": round(completion.latency_ms, 3),
            },
        )


class LLMActionOracle(_LLMOracle):
    def __init__(self, client, goal_text: str):
        super().__init__(client, "action_gen_single")
        self.goal_text = goal_text

    def sample(self, node, i: int) -> OracleReply:
        reply = self._ask({"state": node.content, "goal": self.goal_text})
        first_line = reply.text.splitlines()[0].strip() if reply.text else ""
        return OracleReply(text=first_line, usage=reply.usage, prompt=reply.prompt,
                           system=reply.system, meta=reply.meta)


class LLMSuccessorOracle(_LLMOracle):
    def __init__(self, client):
        super().__init__(client, "successor")

    def map(self, node, action_reply: OracleReply) -> OracleReply:
        reply = self._ask({"state": node.content, "action": action_reply.text})
        return OracleReply(text=reply.text, usage=reply.usage, action=action_reply.action,
                           prompt=reply.prompt, system=reply.system, meta=reply.meta)


class LLMDirectOracle(_LLMOracle):
    def __init__(self, client, goal_text: str):
        super().__init__(client, "direct_step")
        self.goal_text = goal_text

    def sample(self, node, i: int) -> OracleReply:
        return self._ask({"state": node.content, "goal": self.goal_text})


class LLMVerifierOracle(_LLMOracle):
    def __init__(self, client, goal_text: str):
        super().__init__(client, "verify")
        self.goal_text = goal_text

    def check(self, node, task=None) -> OracleReply:
        reply = self._ask({"state": node.content, "goal": self.goal_text})
        answer = parse_yes_no(reply.text)
        verdict = GOAL if answer == YES else CONTINUE if answer == NO else UNPARSEABLE
        return OracleReply(text=reply.text, usage=reply.usage, verdict=verdict,
                           prompt=reply.prompt, system=reply.system, meta=reply.meta)


class LLMNoveltyOracle(_LLMOracle):
    def __init__(self, client, goal_text: str = ""):
        super().__init__(client, "novelty")
        self.goal_text = goal_text

    def judge(self, node, history) -> OracleReply:
        bindings = {
            "new_state": node.content,
            "previous_states_str": history_to_text([h.content for h in history]),
            "goal": self.goal_text,
        }
        reply = self._ask(bindings)
        answer = parse_yes_no(reply.text)
        verdict = answer if answer in (YES, NO) else UNPARSEABLE
        return OracleReply(text=reply.text, usage=reply.usage, verdict=verdict,
                           prompt=reply.prompt, system=reply.system, meta=reply.meta)


def llm_oracles(
    params: LLMParams,
    catalog: PromptCatalog,
    style: str,
    domain_context: str,
    goal_text: str,
    temperatures: dict | None = None,
) -> OracleSet:
    """The four sub-task oracles speaking the chat-completions protocol."""
    client = LLMClient(params, catalog, style, domain_context, temperatures)
    return OracleSet(
        name=f"llm({params.model})",
        action=LLMActionOracle(client, goal_text),
        successor=LLMSuccessorOracle(client),
        direct=LLMDirectOracle(client, goal_text),
        verifier=LLMVerifierOracle(client, goal_text),
        novelty=LLMNoveltyOracle(client, goal_text),
    )
