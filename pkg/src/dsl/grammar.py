"""
Lark grammar of the identity language.

    rr1: sum(n>=0, q^(n^2)/poch(q;q;n)) = 1/infprod(q,q^4;q^5)

Expressions combine sums, finite Pochhammer symbols poch(base;step;length),
infinite products infprod(base, ...;step), powers of q, a and (-1), and
integer constants with + - * /. Exponents and lengths are polynomials in
the summation indices.
"""

from functools import lru_cache

from lark import Lark

GRAMMAR = r"""
identity: IDENTITY_NAME ":" expr "=" expr

?expr: term
     | expr "+" term          -> add
     | expr "-" term          -> sub

?term: signed
     | term "*" signed        -> mul
     | term "/" signed        -> div

?signed: factor
       | "-" signed           -> neg

?factor: sum
       | poch
       | infprod
       | qpow
       | apow
       | group
       | number

sum: "sum" "(" INDEX ">=" INT "," expr ")"
poch: "poch" "(" base ";" base ";" poly ")"
infprod: "infprod" "(" base ("," base)* ";" base ")"
qpow: "q" [power]
apow: "a" [power]
group: "(" expr ")" [power]
number: INT

power: "^" INT                -> int_power
     | "^" "(" poly ")"       -> poly_power

base: bmono                   -> pos_base
    | "-" bmono               -> neg_base
bmono: bterm ("*" bterm)*
     | INT
bterm: "q" ["^" INT]          -> bq
     | "a" ["^" INT]          -> ba

?poly: pterm
     | poly "+" pterm         -> padd
     | poly "-" pterm         -> psub
?pterm: pfactor
      | pterm "*" pfactor     -> pmul
      | pterm "/" INT         -> pdiv
?pfactor: patom
        | "-" pfactor         -> pneg
?patom: pbase
      | pbase "^" INT         -> ppow
?pbase: INT                   -> pint
      | INDEX                 -> pvar
      | "(" poly ")"

IDENTITY_NAME: /[A-Za-z][A-Za-z0-9_\-\/]*/
INDEX: /[A-Za-z_][A-Za-z0-9_]*/

%import common.INT
%import common.WS
%ignore WS
"""


@lru_cache(maxsize=1)
def get_parser() -> Lark:
    """The LALR parser, built once; start symbols "identity" and "expr"."""
    return Lark(
        GRAMMAR,
        start=["identity", "expr"],
        parser="lalr",
        propagate_positions=True,
        maybe_placeholders=True,
    )
