"""Automorphism groups of T_{s,p,n} and M_{s,p,n} by case table.

Both spaces are unchanged up to isomorphism by DUAL (p -> n-p) and USD
(s -> n-s), so every query is first normalized to 2p <= n <= 2s.  The
degenerate rows take precedence over the general ones.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import Params


def normalize(params: Params) -> tuple[Params, list[str]]:
    s, p, n = params.s, params.p, params.n
    trace = []
    if 2 * p > n:
        p = n - p
        trace.append("DUAL")
    if 2 * s < n:
        s = n - s
        trace.append("USD")
    return Params(s, p, n), trace


@dataclass(frozen=True)
class GroupDescriptor:
    space: str
    params: Params
    normalized: Params
    trace: tuple
    connected: str
    discrete: tuple = ()
    case: str = "generic"
    model: str | None = None
    from_proof: bool = False

    def to_json(self):
        return {
            "space": self.space,
            "params": [self.params.s, self.params.p, self.params.n],
            "normalized": [self.normalized.s, self.normalized.p, self.normalized.n],
            "trace": list(self.trace),
            "case": self.case,
            "connected": self.connected,
            "discrete": list(self.discrete),
            "model": self.model,
            "from_proof": self.from_proof,
        }

    def signature(self):
        """Everything except the input triple and its normalization trace."""
        return (self.space, self.connected, self.discrete, self.case, self.model, self.from_proof)


def aut_T(params: Params) -> GroupDescriptor:
    q, trace = normalize(params)
    s, p, n = q.s, q.p, q.n
    base = dict(space="T", params=params, normalized=q, trace=tuple(trace))
    generic = f"(GL_{s}×GL_{n - s})/Z_{n}"
    if (s, p, n) == (1, 1, 2):
        return GroupDescriptor(**base, connected="PGL_2", case="degenerate (1,1,2)", model="P^1")
    if p == 1 and n - s == 1:
        return GroupDescriptor(**base, connected=f"Parabolic({n})", case="degenerate (m,1,m+1)")
    if n == 2 * s and n == 2 * p:
        return GroupDescriptor(**base, connected=generic, discrete=("USD", "DUAL"), case="USD+DUAL")
    if n == 2 * s:
        return GroupDescriptor(**base, connected=generic, discrete=("USD",), case="USD")
    if n == 2 * p:
        return GroupDescriptor(**base, connected=generic, discrete=("DUAL",), case="DUAL")
    return GroupDescriptor(**base, connected=generic)


def aut_M(params: Params) -> GroupDescriptor:
    q, trace = normalize(params)
    s, p, n = q.s, q.p, q.n
    base = dict(space="M", params=params, normalized=q, trace=tuple(trace))
    generic = f"PGL_{s}×PGL_{n - s}"
    if (s, p, n) == (1, 1, 2):
        return GroupDescriptor(**base, connected="trivial", case="degenerate (1,1,2)", model="point")
    if (s, p, n) == (2, 2, 4):
        return GroupDescriptor(**base, connected="PGL_4", case="degenerate (2,2,4)", model="P^3")
    if p == 1 and n - s == 1:
        return GroupDescriptor(
            **base,
            connected=f"PGL_{n - 1}",
            case="degenerate p=n-s=1",
            model=f"P^{n - 2}",
            from_proof=True,
        )
    if p == 1 and 2 <= n - s < s:
        return GroupDescriptor(
            **base,
            connected=generic,
            case="p=1, 2<=n-s<s",
            model=f"P^{s - 1}×P^{n - s - 1}",
            from_proof=True,
        )
    if p == 1 and n == 2 * s:
        return GroupDescriptor(
            **base,
            connected=generic,
            discrete=("Usd",),
            case="Usd",
            model=f"P^{s - 1}×P^{s - 1}",
            from_proof=True,
        )
    if n == 2 * s and n == 2 * p:
        return GroupDescriptor(**base, connected=generic, discrete=("Usd", "Dual"), case="Usd+Dual")
    if n == 2 * s:
        return GroupDescriptor(**base, connected=generic, discrete=("Usd",), case="Usd")
    if n == 2 * p:
        return GroupDescriptor(**base, connected=generic, discrete=("Dual",), case="Dual")
    return GroupDescriptor(**base, connected=generic)
