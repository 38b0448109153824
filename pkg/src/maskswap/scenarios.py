"""Swap scenarios: declarative descriptions, builders, file schema, and
family enumeration.

A scenario file is JSON:

    {"format": 1, "scenarios": [ {...}, ... ]}

where each scenario object has the keys ``family``, ``level``, ``inputs``
and optionally ``params``, ``tol``, ``name``.  Unknown keys are rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path

import numpy as np

from .core import DIMENSION_CAP, ParticleSet, PureState, permute
from .errors import BadScenario, DimensionTooLarge, ScenarioFormatError
from .masking import (
    PhaseAmplitudeInput,
    QuditAmplitudes,
    mask_li_qudit,
    mask_modi_qubit,
    mask_modi_qudit,
)
from .states import (
    BasisSet,
    BellLabel,
    CatLabel,
    MaxEntLabel,
    bell,
    bell_basis,
    cat,
    cat_basis,
    ghz_basis,
    max_entangled,
    max_entangled_basis,
)

FORMAT_VERSION = 1

FAMILIES = (
    "bell_bell",
    "cat_swap",
    "cat_bell",
    "masked_ghz",
    "masked_qudit",
    "li_masked",
    "masking",
)


@dataclass
class SwapScenario:
    """Concrete inputs plus the measurement to perform on them."""

    family: str
    level: int
    states: tuple[PureState, ...]
    measured: ParticleSet
    basis: BasisSet
    meta: dict = field(default_factory=dict)


def bell_bell_scenario(l1: BellLabel, l2: BellLabel) -> SwapScenario:
    return SwapScenario(
        family="bell_bell",
        level=2,
        states=(bell(l1), bell(l2)),
        measured=ParticleSet((1, 3)),
        basis=bell_basis(),
        meta={"labels": (l1, l2)},
    )


def cat_swap_scenario(labels, k) -> SwapScenario:
    labels = tuple(labels)
    k = tuple(int(x) for x in k)
    big_k = sum(k)
    measured = []
    offset = 0
    for label, k_r in zip(labels, k):
        measured.extend(range(offset + 1, offset + 1 + k_r))
        offset += label.m
    if big_k >= offset:
        raise BadScenario("at least one particle must remain unmeasured")
    return SwapScenario(
        family="cat_swap",
        level=2,
        states=tuple(cat(label) for label in labels),
        measured=ParticleSet(measured),
        basis=cat_basis(big_k),
        meta={"labels": labels, "k": k},
    )


def cat_bell_scenario(cat_label: MaxEntLabel, bell_label: MaxEntLabel, k: int) -> SwapScenario:
    d = cat_label.level
    m = cat_label.m
    if not 2 <= k <= m:
        raise BadScenario(f"measured cat particle k={k} out of range")
    # Measured positions ascending are (k, m+1); the basis label's anchor
    # particle is the one from the 2-particle input, i.e. global m+1, so each
    # member is stored with its two particles swapped.
    members = [
        (label, permute(state, (2, 1)))
        for label, state in max_entangled_basis(d, 2).members
    ]
    return SwapScenario(
        family="cat_bell",
        level=d,
        states=(max_entangled(cat_label), max_entangled(bell_label)),
        measured=ParticleSet((k, m + 1)),
        basis=BasisSet(d, 2, members),
        meta={"labels": (cat_label, bell_label), "k": k},
    )


def masked_ghz_scenario(lams) -> SwapScenario:
    lams = tuple(int(x) for x in lams)
    n = len(lams)
    return SwapScenario(
        family="masked_ghz",
        level=2,
        states=tuple(mask_modi_qubit(l) for l in lams),
        measured=ParticleSet(range(1, 2 * n, 2)),
        basis=ghz_basis(n),
        meta={"lams": lams},
    )


def masked_qudit_scenario(inputs) -> SwapScenario:
    inputs = tuple(inputs)
    n = len(inputs)
    d = inputs[0].level
    return SwapScenario(
        family="masked_qudit",
        level=d,
        states=tuple(mask_modi_qudit(inp) for inp in inputs),
        measured=ParticleSet(range(1, 2 * n, 2)),
        basis=max_entangled_basis(d, n),
        meta={"inputs": inputs},
    )


def li_masked_scenario(inputs) -> SwapScenario:
    inputs = tuple(inputs)
    n = len(inputs)
    d = inputs[0].level
    stride = 2 * d
    return SwapScenario(
        family="li_masked",
        level=d,
        states=tuple(mask_li_qudit(inp) for inp in inputs),
        measured=ParticleSet(r * stride + 1 for r in range(n)),
        basis=max_entangled_basis(d, n),
        meta={"inputs": inputs},
    )


# ---------------------------------------------------------------------------
# Scenario file schema
# ---------------------------------------------------------------------------


@dataclass
class ScenarioSpec:
    """One parsed scenario-file entry."""

    name: str
    family: str
    level: int
    inputs: tuple
    params: dict
    tol: float


def _require_keys(obj: dict, where: str, required: set, optional: set) -> None:
    keys = set(obj)
    missing = required - keys
    unknown = keys - required - optional
    if missing:
        raise ScenarioFormatError(f"{where}: missing keys {sorted(missing)}")
    if unknown:
        raise ScenarioFormatError(f"{where}: unknown keys {sorted(unknown)}")


def _parse_input(obj: dict, level: int, where: str):
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ScenarioFormatError(f"{where}: input must be an object with a 'kind'")
    kind = obj["kind"]
    try:
        if kind == "bell":
            _require_keys(obj, where, {"kind", "lam", "a"}, set())
            return BellLabel(obj["lam"], obj["a"])
        if kind == "cat":
            _require_keys(obj, where, {"kind", "bits", "lam"}, set())
            return CatLabel(tuple(obj["bits"]), obj["lam"])
        if kind == "max_ent":
            _require_keys(obj, where, {"kind", "u"}, set())
            return MaxEntLabel(level, tuple(obj["u"]))
        if kind == "masked_bit":
            _require_keys(obj, where, {"kind", "lam"}, set())
            if obj["lam"] not in (0, 1):
                raise ScenarioFormatError(f"{where}: lam must be 0 or 1")
            return int(obj["lam"])
        if kind == "phase_amplitude":
            _require_keys(obj, where, {"kind", "eta", "theta"}, set())
            return PhaseAmplitudeInput(level, tuple(obj["eta"]), tuple(obj["theta"]))
        if kind == "qudit_amplitudes":
            _require_keys(obj, where, {"kind", "alpha"}, set())
            alpha = tuple(complex(re, im) for re, im in obj["alpha"])
            return QuditAmplitudes(level, alpha)
    except ScenarioFormatError:
        raise
    except Exception as exc:
        raise ScenarioFormatError(f"{where}: invalid input: {exc}") from exc
    raise ScenarioFormatError(f"{where}: unknown input kind {kind!r}")


def parse_scenario(obj: dict, where: str = "scenario") -> ScenarioSpec:
    if not isinstance(obj, dict):
        raise ScenarioFormatError(f"{where}: expected an object")
    _require_keys(
        obj, where, {"family", "level", "inputs"}, {"params", "tol", "name"}
    )
    family = obj["family"]
    if family not in FAMILIES:
        raise ScenarioFormatError(f"{where}: unknown family {family!r}")
    level = obj["level"]
    if not isinstance(level, int) or level < 2:
        raise ScenarioFormatError(f"{where}: level must be an integer >= 2")
    if not isinstance(obj["inputs"], list) or not obj["inputs"]:
        raise ScenarioFormatError(f"{where}: inputs must be a nonempty list")
    inputs = tuple(
        _parse_input(entry, level, f"{where}.inputs[{i}]")
        for i, entry in enumerate(obj["inputs"])
    )
    params = obj.get("params", {})
    if not isinstance(params, dict):
        raise ScenarioFormatError(f"{where}: params must be an object")
    tol = obj.get("tol", 1e-9)
    if not isinstance(tol, (int, float)) or tol <= 0:
        raise ScenarioFormatError(f"{where}: tol must be a positive number")
    name = obj.get("name", f"{family}")
    return ScenarioSpec(
        name=name, family=family, level=level, inputs=inputs,
        params=dict(params), tol=float(tol),
    )


def parse_scenario_document(doc, where: str = "document") -> list[ScenarioSpec]:
    if not isinstance(doc, dict):
        raise ScenarioFormatError(f"{where}: expected a top-level object")
    _require_keys(doc, where, {"format", "scenarios"}, set())
    if doc["format"] != FORMAT_VERSION:
        raise ScenarioFormatError(
            f"{where}: unsupported format {doc['format']!r}, expected {FORMAT_VERSION}"
        )
    if not isinstance(doc["scenarios"], list):
        raise ScenarioFormatError(f"{where}: scenarios must be a list")
    return [
        parse_scenario(entry, f"{where}.scenarios[{i}]")
        for i, entry in enumerate(doc["scenarios"])
    ]


def load_scenario_file(path) -> list[ScenarioSpec]:
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ScenarioFormatError(f"{path}: invalid JSON: {exc}") from exc
    return parse_scenario_document(doc, str(path))


def load_scenarios(path) -> list[ScenarioSpec]:
    """Load a scenario file, or every ``*.json`` file in a directory."""
    path = Path(path)
    if path.is_dir():
        specs = []
        files = sorted(path.glob("*.json"))
        if not files:
            raise ScenarioFormatError(f"{path}: no scenario files found")
        for f in files:
            specs.extend(load_scenario_file(f))
        return specs
    return load_scenario_file(path)


# ---------------------------------------------------------------------------
# Family enumeration
# ---------------------------------------------------------------------------


def _random_phase_amplitude(rng: np.random.Generator, d: int) -> dict:
    eta = np.abs(rng.normal(size=d))
    eta /= np.linalg.norm(eta)
    theta = rng.uniform(-np.pi, np.pi, size=d)
    return {
        "kind": "phase_amplitude",
        "eta": [float(x) for x in eta],
        "theta": [float(x) for x in theta],
    }


def _random_qudit_amplitudes(rng: np.random.Generator, d: int) -> dict:
    alpha = rng.normal(size=d) + 1j * rng.normal(size=d)
    alpha /= np.linalg.norm(alpha)
    return {
        "kind": "qudit_amplitudes",
        "alpha": [[float(z.real), float(z.imag)] for z in alpha],
    }


def enumerate_scenarios(
    family: str,
    *,
    d_max: int = 3,
    n_max: int = 2,
    m_max: int = 3,
    count: int = 50,
    seed: int = 0,
) -> list[dict]:
    """Produce scenario objects for a family: exhaustive for the discrete
    label families, seeded random samples for the continuous ones."""
    rng = np.random.default_rng(seed)
    scenarios: list[dict] = []

    if family == "bell_bell":
        for lam1, a1, lam2, a2 in product((0, 1), repeat=4):
            scenarios.append({
                "family": "bell_bell",
                "level": 2,
                "name": f"bell_bell l{lam1}{lam2} a{a1}{a2}",
                "inputs": [
                    {"kind": "bell", "lam": lam1, "a": a1},
                    {"kind": "bell", "lam": lam2, "a": a2},
                ],
            })
    elif family == "cat_swap":
        for m1, m2 in product(range(2, m_max + 1), repeat=2):
            for bits1 in product((0, 1), repeat=m1):
                for bits2 in product((0, 1), repeat=m2):
                    for lam1, lam2 in product((0, 1), repeat=2):
                        for k1, k2 in product(range(1, m1 + 1), range(1, m2 + 1)):
                            if k1 + k2 >= m1 + m2:
                                continue
                            scenarios.append({
                                "family": "cat_swap",
                                "level": 2,
                                "name": (
                                    f"cat m{m1}{m2} a{''.join(map(str, bits1))}"
                                    f"/{''.join(map(str, bits2))} l{lam1}{lam2} k{k1}{k2}"
                                ),
                                "inputs": [
                                    {"kind": "cat", "bits": list(bits1), "lam": lam1},
                                    {"kind": "cat", "bits": list(bits2), "lam": lam2},
                                ],
                                "params": {"k": [k1, k2]},
                            })
    elif family == "cat_bell":
        for i in range(count):
            d = int(rng.integers(2, d_max + 1))
            m = int(rng.integers(2, m_max + 1))
            k = int(rng.integers(2, m + 1))
            u1 = [int(x) for x in rng.integers(0, d, size=m)]
            u2 = [int(x) for x in rng.integers(0, d, size=2)]
            scenarios.append({
                "family": "cat_bell",
                "level": d,
                "name": f"cat_bell d{d} m{m} k{k} #{i}",
                "inputs": [
                    {"kind": "max_ent", "u": u1},
                    {"kind": "max_ent", "u": u2},
                ],
                "params": {"k": k},
            })
    elif family == "masked_ghz":
        for n in range(2, n_max + 1):
            for lams in product((0, 1), repeat=n):
                scenarios.append({
                    "family": "masked_ghz",
                    "level": 2,
                    "name": f"masked_ghz l{''.join(map(str, lams))}",
                    "inputs": [{"kind": "masked_bit", "lam": l} for l in lams],
                })
    elif family == "masked_qudit":
        for i in range(count):
            d = int(rng.integers(2, d_max + 1))
            n = int(rng.integers(2, n_max + 1))
            scenarios.append({
                "family": "masked_qudit",
                "level": d,
                "name": f"masked_qudit d{d} n{n} #{i}",
                "inputs": [_random_phase_amplitude(rng, d) for _ in range(n)],
            })
    elif family == "li_masked":
        for i in range(count):
            d = int(rng.integers(2, min(d_max, 3) + 1))
            n = 2 if d == 3 else int(rng.integers(2, min(n_max, 3) + 1))
            if (d ** (2 * d)) ** n > DIMENSION_CAP:
                raise DimensionTooLarge("li_masked bounds exceed the dimension cap")
            scenarios.append({
                "family": "li_masked",
                "level": d,
                "name": f"li_masked d{d} n{n} #{i}",
                "inputs": [_random_qudit_amplitudes(rng, d) for _ in range(n)],
            })
    elif family == "masking":
        scenarios.append({
            "family": "masking",
            "level": 2,
            "name": "masking modi bits",
            "inputs": [{"kind": "masked_bit", "lam": 0}, {"kind": "masked_bit", "lam": 1}],
        })
        for d in range(2, d_max + 1):
            scenarios.append({
                "family": "masking",
                "level": d,
                "name": f"masking modi qudit d{d}",
                "inputs": [_random_phase_amplitude(rng, d) for _ in range(count)],
            })
        for d in (2, 3):
            if d <= d_max:
                scenarios.append({
                    "family": "masking",
                    "level": d,
                    "name": f"masking li d{d}",
                    "inputs": [_random_qudit_amplitudes(rng, d) for _ in range(count)],
                })
    else:
        raise ScenarioFormatError(f"unknown family {family!r}")

    return scenarios


def scenario_document(scenarios: list[dict]) -> dict:
    return {"format": FORMAT_VERSION, "scenarios": scenarios}


# Built-in suites used by the CLI; each returns a list of scenario objects.
SUITES = {
    "bell-bell-all": lambda seed=0: enumerate_scenarios("bell_bell", seed=seed),
    "masking-def1": lambda seed=0: enumerate_scenarios(
        "masking", d_max=7, count=20, seed=seed
    ),
    "cat-swap": lambda seed=0: enumerate_scenarios(
        "cat_swap", m_max=3, seed=seed
    ),
    "cat-bell": lambda seed=0: enumerate_scenarios(
        "cat_bell", d_max=5, m_max=4, count=50, seed=seed
    ),
    "ghz-parity": lambda seed=0: enumerate_scenarios("masked_ghz", n_max=4, seed=seed),
    "masked-qudit": lambda seed=0: enumerate_scenarios(
        "masked_qudit", d_max=5, n_max=2, count=25, seed=seed
    ),
    "li-masked": lambda seed=0: enumerate_scenarios(
        "li_masked", d_max=3, n_max=2, count=10, seed=seed
    ),
}
SUITES["all"] = lambda seed=0: [
    s for name, gen in SUITES.items() if name != "all" for s in gen(seed)
]
