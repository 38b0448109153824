"""Erratum ledger: published closed-form expressions vs the oracle-validated
forms implemented here.

Each entry records a spot where the published formula for a swap family, as
printed, disagrees with (or underdetermines) the brute-force result, and the
correction the predictors implement.  Entries are attached to verification
reports whenever the affected family is exercised.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class Erratum:
    id: str
    family: str
    published_form: str
    implemented_form: str
    status: str

    def to_dict(self) -> dict:
        return asdict(self)


ERRATA = (
    Erratum(
        id="cat-swap-pattern-sign",
        family="cat_swap",
        published_form=(
            "the sign weights of the cat-pair outcomes are written with a "
            "single exponent over the complemented leading bits of the input "
            "labels, as if constant across outcome patterns"
        ),
        implemented_form=(
            "the sign of each outcome pattern depends on which input blocks "
            "are complemented in that pattern; the weights (s + s')/2 and "
            "(s - s')/2 are computed per pattern from its own sign s and the "
            "sign s' of its global complement"
        ),
        status="oracle-validated",
    ),
    Erratum(
        id="cat-bell-remainder-anchor",
        family="cat_bell",
        published_form=(
            "in the double-sum form, the remainder argument list repeats the "
            "unshifted anchor offset right after the shifted anchor"
        ),
        implemented_form=(
            "the remainder takes the shifted anchor argument once, followed "
            "by the untouched offsets, with the slot of the measured particle "
            "replaced by the partner-particle offset"
        ),
        status="oracle-validated",
    ),
    Erratum(
        id="cat-bell-anchor-measurement",
        family="cat_bell",
        published_form=(
            "the measured particle index is unconstrained, but the slot "
            "substitution in the remainder is only meaningful for "
            "non-anchor particles"
        ),
        implemented_form=(
            "the predictors require 2 <= k <= m; measuring the anchor "
            "particle would re-anchor the remainder and needs a different "
            "argument shift than the printed one"
        ),
        status="restriction",
    ),
    Erratum(
        id="masked-qudit-remainder-offset",
        family="masked_qudit",
        published_form=(
            "one remainder offset in the collapsed ket is written with a "
            "u-index where the neighbouring offsets use the measurement "
            "outcome indices v"
        ),
        implemented_form=(
            "every remainder offset uses the measurement outcome index: the "
            "collapsed ket is |t, t+v2, ..., t+vn| summed over the anchor t"
        ),
        status="oracle-validated",
    ),
)


def errata_for(families) -> tuple[Erratum, ...]:
    families = set(families)
    return tuple(e for e in ERRATA if e.family in families)
