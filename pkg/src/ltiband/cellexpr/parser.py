"""
Spike-train expression parser using Lark.
"""

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import LarkError, VisitError

from ..exceptions import CellExpressionError, InvalidArgumentError
from ..lattice import SpikeTrain, spike_train
from .grammar import CELL_GRAMMAR

# (weight, position) pairs produced while walking the tree
_Term = tuple[float, int]


def _sign(token: Token | None) -> int:
    return -1 if token is not None and str(token) in ("-", "−") else 1


class CellTransformer(Transformer[Token, list[_Term]]):
    """Transform parse tree into (weight, position) terms."""

    def weight(self, items: list[Token | None]) -> float:
        return float(str(items[0]))

    def numeric_offset(self, items: list[Token | None]) -> int:
        sign, number = items[0], str(items[1])
        value = float(number)
        if not value.is_integer():
            raise CellExpressionError(
                f"spike offsets must be integer multiples of a, got {number}",
                fields=[("cell", f"non-integer offset {number}")],
            )
        # δ[x - m a] sits at +m
        return -_sign(sign) * int(value)

    @v_args(inline=True)
    def unit_offset(self, sign: Token) -> int:
        return -_sign(sign)

    @v_args(inline=True)
    def term(self, weight: float | None, _delta: Token, offset: int | None) -> _Term:
        return (1.0 if weight is None else weight, 0 if offset is None else offset)

    @v_args(inline=True)
    def first_term(self, sign: Token | None, term: _Term) -> _Term:
        return (_sign(sign) * term[0], term[1])

    def start(self, items: list[_Term | Token]) -> list[_Term]:
        terms: list[_Term] = []
        pending_sign = 1
        for item in items:
            if isinstance(item, Token):
                pending_sign = _sign(item)
            else:
                terms.append((pending_sign * item[0], item[1]))
                pending_sign = 1
        return terms


_parser = Lark(CELL_GRAMMAR, parser="lalr", transformer=CellTransformer())


def parse_cell(text: str) -> SpikeTrain:
    """Parse a cell expression into a spike train; repeated positions add their weights."""
    try:
        terms: list[_Term] = _parser.parse(text)  # type: ignore[assignment]
    except VisitError as e:
        if isinstance(e.orig_exc, CellExpressionError):
            raise e.orig_exc from None
        raise CellExpressionError(f"invalid cell expression {text!r}: {e.orig_exc}") from None
    except CellExpressionError:
        raise
    except LarkError as e:
        raise CellExpressionError(
            f"invalid cell expression {text!r}",
            fields=[("cell", str(e).splitlines()[0])],
        ) from None

    merged: dict[int, float] = {}
    for weight, position in terms:
        merged[position] = merged.get(position, 0.0) + weight
    positions = sorted(merged)
    try:
        return spike_train(positions, [merged[p] for p in positions])
    except InvalidArgumentError as e:
        raise CellExpressionError(str(e)) from None


def _format_number(value: float) -> str:
    return str(int(value)) if value.is_integer() else repr(value)


def _format_delta(position: int) -> str:
    if position == 0:
        return "δ[x]"
    shift = abs(position)
    multiple = "a" if shift == 1 else f"{shift}a"
    # positive position means a negative shift inside the bracket
    op = "-" if position > 0 else "+"
    return f"δ[x {op} {multiple}]"


def format_cell(train: SpikeTrain) -> str:
    """Canonical expression for a spike train; parse_cell(format_cell(t)) == t."""
    parts: list[str] = []
    for spike in train.spikes:
        weight = spike.weight
        magnitude = abs(weight)
        body = _format_delta(spike.position)
        if magnitude != 1.0:
            body = f"{_format_number(magnitude)}*{body}"
        if not parts:
            parts.append(f"-{body}" if weight < 0 else body)
        else:
            parts.append(f"{'-' if weight < 0 else '+'} {body}")
    return " ".join(parts)
