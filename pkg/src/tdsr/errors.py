"""Exception hierarchy shared by every tdsr module.

Each class carries a stable ``code`` so the command-line front end can map
failures to machine-readable error identifiers.
"""

from __future__ import annotations


class TdsrError(Exception):
    code = "tdsr_error"


class ParseError(TdsrError):
    """Edge-list parse failure. ``problems`` lists ``(line_number, message)``."""

    code = "parse_error"

    def __init__(self, message: str, problems: list[tuple[int, str]] | None = None):
        super().__init__(message)
        self.problems = problems or []

    @property
    def lines(self) -> list[int]:
        return [lineno for lineno, _ in self.problems]


class MalformedLine(ParseError):
    code = "malformed_line"


class VertexOutOfRange(ParseError):
    code = "vertex_out_of_range"


class SelfLoop(ParseError):
    code = "self_loop"


class OrderTooLarge(TdsrError):
    code = "order_too_large"


class BadParameter(TdsrError):
    code = "bad_parameter"


class TooLarge(TdsrError):
    code = "too_large"


class IsolatedVertex(TdsrError):
    code = "isolated_vertex"


class VertexNotInSet(TdsrError):
    code = "vertex_not_in_set"


class NotATds(TdsrError):
    code = "not_a_tds"


class NotConnected(TdsrError):
    code = "not_connected"


class CapExceeded(TdsrError):
    code = "cap_exceeded"


class SizeExceedsK(TdsrError):
    code = "size_exceeds_k"
