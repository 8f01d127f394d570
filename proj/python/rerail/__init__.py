"""Rerailing automata: membership, minimization, verification and realizability."""

from ._rerail import (
    Automaton,
    Error,
    ParseError,
    decompose,
    equivalent,
    member,
    minimize,
    realizable,
    run_cli,
    verify,
)

__all__ = [
    "Automaton",
    "Error",
    "ParseError",
    "decompose",
    "equivalent",
    "member",
    "minimize",
    "realizable",
    "run_cli",
    "verify",
]
