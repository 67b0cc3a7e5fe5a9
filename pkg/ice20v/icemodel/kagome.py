"""
Kagome decomposition of the twenty-vertex model and its Yang-Baxter relations.

Every twenty-vertex site splits into a small triangle of six-vertex sites:

- sublattice 1, top right, where the horizontal and the vertical line cross
- sublattice 2, top left, where the horizontal and the diagonal line cross
- sublattice 3, bottom, where the vertical and the diagonal line cross

The horizontal line runs W → site 2 → site 1 → E, the vertical line N → site 1 → site 3 → S and
the diagonal NW → site 2 → site 3 → SE. Summing over the three inner edges of the triangle
gives the weight of the twenty-vertex environment.
"""

import itertools
import logging
import typing as t
from dataclasses import dataclass, replace

from ice20v.exactalg.cyclotomic import Cyclotomic2k
from ice20v.exactalg.laurent import LaurentMulti
from ice20v.icemodel.model import ENVIRONMENTS, VertexEnvironment
from ice20v.icemodel.report import Report
from ice20v.icemodel.sixvertex import StaggeredVariant, count_staggered_6v, vertex_type

logger = logging.getLogger(__name__)

Triple = t.Tuple[t.Any, t.Any, t.Any]

SPECTRAL_VARIABLES = ("Z", "W", "T", "q")


def _weight(triple: Triple, w: int, n: int, e: int, s: int) -> t.Any:
    kind = vertex_type(w, n, e, s)
    if kind is None:
        return 0
    return triple["abc".index(kind)]


@dataclass(frozen=True)
class WeightSystem:
    sub1: Triple
    sub2: Triple
    sub3: Triple

    @classmethod
    def homogeneous(cls, alpha: t.Any = 1, beta: t.Any = 1, gamma: t.Any = 1, k: int = 2) -> "WeightSystem":
        """
        α(1,√2,1), β(√2,1,1), γ(√2,1,1). Every relation then holds up to the common factor 2αβγ.
        """
        one = Cyclotomic2k.one(k)
        root = Cyclotomic2k.sqrt2(k)
        return cls(
            sub1=(alpha * one, alpha * root, alpha * one),
            sub2=(beta * root, beta * one, beta * one),
            sub3=(gamma * root, gamma * one, gamma * one),
        )

    @classmethod
    def integrable(cls) -> "WeightSystem":
        """
        Spectral weights with z = Z², w = W², t = T², so the square roots in the c-weights are monomials.
        """
        Z, W, T, q = (LaurentMulti.generator(SPECTRAL_VARIABLES, name) for name in SPECTRAL_VARIABLES)
        kappa = q**2 - q**-2
        return cls(
            sub1=(Z**2 - W**2, q**-2 * Z**2 - q**2 * W**2, kappa * Z * W),
            sub2=(q * Z**2 - q**-1 * T**2, q**-1 * Z**2 - q * T**2, kappa * Z * T),
            sub3=(q * T**2 - q**-1 * W**2, q**-1 * T**2 - q * W**2, kappa * T * W),
        )

    def map(self, fn: t.Callable[[t.Any], t.Any]) -> "WeightSystem":
        return WeightSystem(
            sub1=tuple(fn(x) for x in self.sub1),  # type: ignore[arg-type]
            sub2=tuple(fn(x) for x in self.sub2),  # type: ignore[arg-type]
            sub3=tuple(fn(x) for x in self.sub3),  # type: ignore[arg-type]
        )

    def triangle_weight(self, env: VertexEnvironment) -> t.Any:
        """
        Sum over the inner edges (site 2 → site 1, site 2 → site 3, site 1 → site 3).
        """
        total: t.Any = 0
        for h_inner, d_inner, v_inner in itertools.product((0, 1), repeat=3):
            w2 = _weight(self.sub2, env.w, env.nw, h_inner, d_inner)
            w1 = _weight(self.sub1, h_inner, env.n, env.e, v_inner)
            w3 = _weight(self.sub3, d_inner, v_inner, env.se, env.s)
            if w1 == 0 or w2 == 0 or w3 == 0:
                continue
            total = total + w1 * w2 * w3
        return total

    def relations(self) -> t.List[t.Tuple[str, t.Any]]:
        """
        The ten distinct triangle sums, each of which has to equal the common normalization.
        """
        a1, b1, c1 = self.sub1
        a2, b2, c2 = self.sub2
        a3, b3, c3 = self.sub3
        return [
            ("a1a2a3", a1 * a2 * a3),
            ("b1a2b3", b1 * a2 * b3),
            ("b1a2c3", b1 * a2 * c3),
            ("c1a2a3", c1 * a2 * a3),
            ("b1c2a3", b1 * c2 * a3),
            ("b1b2a3", b1 * b2 * a3),
            ("a1b2c3+c1c2b3", a1 * b2 * c3 + c1 * c2 * b3),
            ("a1b2b3+c1c2c3", a1 * b2 * b3 + c1 * c2 * c3),
            ("c1b2b3+a1c2c3", c1 * b2 * b3 + a1 * c2 * c3),
            ("c1b2c3+a1c2b3", c1 * b2 * c3 + a1 * c2 * b3),
        ]

    def yang_baxter(self) -> t.List[t.Tuple[str, t.Any]]:
        a1, b1, c1 = self.sub1
        a2, b2, c2 = self.sub2
        a3, b3, c3 = self.sub3
        return [
            ("(a1b2-b1a2)c3+c1c2b3", (a1 * b2 - b1 * a2) * c3 + c1 * c2 * b3),
            ("(a1b3-b1a3)c2+c1c3b2", (a1 * b3 - b1 * a3) * c2 + c1 * c3 * b2),
            ("(b2b3-a2a3)c1+c2c3a1", (b2 * b3 - a2 * a3) * c1 + c2 * c3 * a1),
        ]

    def perturbed(self) -> "WeightSystem":
        """
        b1 shifted by one, a deliberate violation of the relations.
        """
        a1, b1, c1 = self.sub1
        return replace(self, sub1=(a1, b1 + 1, c1))


def clear_denominators(expression: LaurentMulti, name: str = "q") -> LaurentMulti:
    """
    Multiply by the smallest power of `name` that leaves no negative exponent in it.
    """
    if expression.is_zero():
        return expression
    index = expression.variables.index(name)
    lowest = min(exps[index] for exps in expression.terms)
    if lowest >= 0:
        return expression
    return expression * LaurentMulti.generator(expression.variables, name, -lowest)


def homogeneous_point() -> t.Dict[str, Cyclotomic2k]:
    """
    t = 1, z = q⁶, w = q⁻⁶ at q = exp(iπ/8).
    """
    q = Cyclotomic2k.zeta_power(3, 1)
    one = Cyclotomic2k.one(3)
    return {"Z": q**3, "W": q**-3, "T": one, "q": q}


def verify_kagome(n_max: int = 2) -> Report:
    report = Report(title="kagome")

    q = Cyclotomic2k.zeta_power(3, 1)
    solution = WeightSystem.homogeneous(alpha=1, beta=q**3, gamma=q**-3, k=3)
    scale = 2 * q**3 * q**-3
    for name, value in solution.relations():
        report.add(f"relation:{name}", 1, value / scale, detail="normalized by 2αβγ")
    for name, value in solution.yang_baxter():
        report.add(f"yang-baxter:{name}", 0, value)

    base = WeightSystem.homogeneous()
    for index, env in enumerate(ENVIRONMENTS, start=1):
        report.add(f"triangle:{index}", 2, base.triangle_weight(env))
    for bits in itertools.product((0, 1), repeat=6):
        env = VertexEnvironment(*bits)
        if not env.is_valid:
            report.add(f"triangle-invalid:{''.join(map(str, bits))}", 0, base.triangle_weight(env))

    symbolic = WeightSystem.integrable()
    for name, value in symbolic.yang_baxter():
        residual = clear_denominators(value)
        report.add(f"integrable:{name}", "0", str(residual))

    values = homogeneous_point()
    point = symbolic.map(lambda expr: expr.evaluate(values))
    root = Cyclotomic2k.sqrt2(3)
    c1 = point.sub1[2]
    c2 = point.sub2[2]
    c3 = point.sub3[2]
    report.add("homogeneous:sub1", (c1, root * c1, c1), point.sub1)
    report.add("homogeneous:sub2", (root * c2, c2, c2), point.sub2)
    report.add("homogeneous:sub3", (root * c3, c3, c3), point.sub3)
    report.add("homogeneous:phases", (q**3 * c1, q**-3 * c1), (c2, c3))

    for n in range(1, n_max + 1):
        check = count_staggered_6v(n, StaggeredVariant.DWBC)
        report.add(f"lattice:n={n}", check.expected, check.staggered)

    logger.info(f"Kagome checks: {len(report) - len(report.failures())}/{len(report)} passed")
    return report


def kagome_negative_control() -> Report:
    """
    The same relations for perturbed weights; a healthy check suite reports failures here.
    """
    report = Report(title="kagome-negative-control")
    broken = WeightSystem.homogeneous().perturbed()
    for name, value in broken.relations():
        report.add(f"relation:{name}", 2, value)
    symbolic = WeightSystem.integrable().perturbed()
    for name, value in symbolic.yang_baxter():
        report.add(f"integrable:{name}", "0", str(clear_denominators(value)))
    return report
