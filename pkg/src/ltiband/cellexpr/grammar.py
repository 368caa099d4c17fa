"""
Spike-train expression grammar.

A cell is written as a sum of shifted deltas, optionally weighted:

Examples:
    δ[x]                            - single site at the origin
    δ[x] + δ[x - a]                 - two-site cell at {0, 1}
    δ[x + a] + δ[x] + δ[x − 2a]     - sites at {-1, 0, 2}
    d[x+1] + 0.5*d[x-1]             - ASCII spelling, bare integer offsets, weights

δ[x - m a] places a spike at position +m.
"""

CELL_GRAMMAR = r"""
    start: first_term (ADDOP term)*

    first_term: [ADDOP] term

    term: [weight] DELTA "[" "x" [offset] "]"

    weight: NUMBER ["*"]

    offset: ADDOP NUMBER ["a"]          -> numeric_offset
          | ADDOP "a"                   -> unit_offset

    ADDOP: "+" | "-" | "−"
    DELTA: "δ" | "delta" | "d"
    NUMBER: /(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?/

    %import common.WS
    %ignore WS
"""
