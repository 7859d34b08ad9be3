"""Algebra spec files (TOML) and the bundled presets.

A spec file declares one algebra:

    [ring]
    kind = "poly"            # poly | laurent | skew
    field = "Q"              # or "Fp" with p = 5
    vars = ["h"]
    # skew handles instead use: base_vars, var, and a [ring.twist] table

    [endo.sigma]
    h = "h - 1"

    [gwa]                    # and/or [dpr], [rankn]
    sigma = "sigma"
    tau = "tau"
    a = "h"
"""

try:
    import tomllib
except ImportError:  # Python 3.10
    import tomli as tomllib

from dataclasses import dataclass

from .dpr import DprData
from .endos import RingEndo
from .errors import SpecInvalid
from .fields import QQ, PrimeField
from .gwa import GwaData
from .parser import parse_expression
from .rankn import RankNData
from .rings import PolyRing, SkewPolyRing


@dataclass
class AlgebraSpec:
    name: str
    ring: object
    endos: dict
    gwa: object | None
    dpr: object | None
    rankn: object | None
    raw: dict


def _build_field(section):
    kind = section.get("field", "Q")
    if kind == "Q":
        return QQ
    if kind == "Fp":
        if "p" not in section:
            raise SpecInvalid("field Fp needs p")
        return PrimeField(section["p"])
    raise SpecInvalid(f"unknown field {kind!r}")


def _build_ring(section):
    field = _build_field(section)
    kind = section.get("kind", "poly")
    if kind == "poly":
        return PolyRing(field, tuple(section.get("vars", [])))
    if kind == "laurent":
        return PolyRing(field, tuple(section["vars"]), laurent=True)
    if kind == "skew":
        base = PolyRing(field, tuple(section["base_vars"]))
        twist_tbl = section.get("twist", {})
        images = {
            name: parse_expression(expr, base) for name, expr in twist_tbl.items()
        }
        twist = RingEndo(base, images)
        return SkewPolyRing(base, section["var"], twist)
    raise SpecInvalid(f"unknown ring kind {kind!r}")


def _build_endo(ring, table):
    images = {name: parse_expression(expr, ring) for name, expr in table.items()}
    missing = set(ring.gen_names()) - set(images)
    if missing:
        raise SpecInvalid(f"endo images missing for {sorted(missing)}")
    return RingEndo(ring, images)


def parse_spec(data, name="<spec>"):
    if "ring" not in data:
        raise SpecInvalid("missing [ring] section")
    ring = _build_ring(data["ring"])
    endos = {}
    for ename, table in data.get("endo", {}).items():
        endos[ename] = _build_endo(ring, table)

    def endo_ref(label):
        if label == "id":
            from .endos import identity_endo

            return identity_endo(ring)
        if label not in endos:
            raise SpecInvalid(f"unknown endo {label!r}")
        return endos[label]

    gwa = None
    if "gwa" in data:
        g = data["gwa"]
        gwa = GwaData(
            ring,
            endo_ref(g.get("sigma", "sigma")),
            endo_ref(g.get("tau", "tau")),
            parse_expression(g["a"], ring),
        )
    dpr = None
    if "dpr" in data:
        d = data["dpr"]
        dpr = DprData(
            ring,
            endo_ref(d.get("sigma", "sigma")),
            endo_ref(d.get("tau", "tau")),
            parse_expression(d["b"], ring),
            parse_expression(d.get("rho", "1"), ring),
        )
    rankn = None
    if "rankn" in data:
        r = data["rankn"]
        sigmas = [endo_ref(s) for s in r["sigma"]]
        taus = [endo_ref(t) for t in r["tau"]]
        a_list = [parse_expression(a, ring) for a in r["a"]]
        coeffs = {}
        for key in ("lam", "lamp", "mu", "mup"):
            table = r.get(key, {})
            parsed = {}
            for pair, expr in table.items():
                i, j = (int(part) for part in pair.split(","))
                parsed[(i, j)] = parse_expression(expr, ring)
            coeffs[key] = parsed
        rankn = RankNData(ring, sigmas, taus, a_list, coeffs)
    if gwa is None and dpr is None and rankn is None:
        raise SpecInvalid("no [gwa], [dpr], or [rankn] section")
    return AlgebraSpec(name, ring, endos, gwa, dpr, rankn, data)


def load_spec(path):
    with open(path, "rb") as fh:
        data = tomllib.load(fh)
    return parse_spec(data, name=str(path))


# ---------------------------------------------------------------------------
# bundled presets

PRESETS = {
    "weyl-q": """
[ring]
kind = "poly"
field = "Q"
vars = ["h"]

[endo.sigma]
h = "h - 1"

[endo.tau]
h = "h + 1"

[gwa]
sigma = "sigma"
tau = "tau"
a = "h"
""",
    "weyl-fp": """
[ring]
kind = "poly"
field = "Fp"
p = {p}
vars = ["h"]

[endo.sigma]
h = "h - 1"

[endo.tau]
h = "h + 1"

[gwa]
sigma = "sigma"
tau = "tau"
a = "h"
""",
    "weyl-q-dpr": """
[ring]
kind = "poly"
field = "Q"
vars = []

[dpr]
sigma = "id"
tau = "id"
b = "1"
rho = "1"
""",
    "weyl-fp-dpr": """
[ring]
kind = "poly"
field = "Fp"
p = {p}
vars = []

[dpr]
sigma = "id"
tau = "id"
b = "1"
rho = "1"
""",
    "quantum-plane-gwa": """
[ring]
kind = "skew"
field = "Q"
base_vars = ["q"]
var = "p"

[ring.twist]
q = "2*q"

[endo.sigma]
q = "5*q"
p = "3*p"

[endo.tau]
q = "2/5*q"
p = "1/6*p"

[gwa]
sigma = "sigma"
tau = "tau"
a = "q*p"
""",
    "usl2-dpr": """
[ring]
kind = "poly"
field = "Q"
vars = ["H"]

[endo.sigma]
H = "H - 1"

[endo.tau]
H = "H + 1"

[dpr]
sigma = "sigma"
tau = "tau"
b = "2*H"
rho = "1"
""",
    "usl2-gwa": """
[ring]
kind = "poly"
field = "Q"
vars = ["H", "C"]

[endo.sigma]
H = "H - 1"
C = "C"

[endo.tau]
H = "H + 1"
C = "C"

[gwa]
sigma = "sigma"
tau = "tau"
a = "C - H^2 - H"
""",
    "oq2so3-dpr": """
[ring]
kind = "poly"
field = "Q"
vars = ["H"]

[endo.sigma]
H = "4*H"

[endo.tau]
H = "1/4*H"

[dpr]
sigma = "sigma"
tau = "tau"
b = "3/2*H"
rho = "1"
""",
    "rank2-weyl": """
[ring]
kind = "poly"
field = "Q"
vars = ["H1", "H2"]

[endo.s1]
H1 = "H1 - 1"
H2 = "H2"

[endo.t1]
H1 = "H1 + 1"
H2 = "H2"

[endo.s2]
H1 = "H1"
H2 = "H2 - 1"

[endo.t2]
H1 = "H1"
H2 = "H2 + 1"

[rankn]
sigma = ["s1", "s2"]
tau = ["t1", "t2"]
a = ["H1", "H2"]

[rankn.lam]
"2,1" = "1"

[rankn.lamp]
"2,1" = "1"

[rankn.mu]
"2,1" = "1"

[rankn.mup]
"2,1" = "1"
""",
}


def load_preset(name, p=5):
    if name not in PRESETS:
        raise SpecInvalid(f"unknown preset {name!r}")
    text = PRESETS[name]
    if "{p}" in text:
        text = text.replace("{p}", str(p))
    return parse_spec(tomllib.loads(text), name=name)
