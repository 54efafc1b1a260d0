"""
Shared Hypothesis strategies for property-based testing across mirlib.
"""
# 说明：属性测试中共享的 Hypothesis 策略集。
# 职责：
# - 生成小分母的有理数与指数非负的精确 Novikov 标量
# - 生成三角形图表环上的单项式和元素
# - 生成 Adams 参数与路径时刻
# - 暴露稳定的 RNG 种子生成策略以支持随机态射的可复现性

from fractions import Fraction

from hypothesis import strategies as st

from mirlib.core.affine import triangle_atlas
from mirlib.core.affinoid import AffinoidElement
from mirlib.core.novikov import NovikovScalar

TRIANGLE = triangle_atlas()


# ------------------------------------------------------------------ Basic Types
@st.composite
def rationals(draw, low=-3, high=3, max_denominator=6):
    # 分母受控的有理数，保持多项式乘法规模可控
    denominator = draw(st.integers(1, max_denominator))
    numerator = draw(st.integers(low * denominator, high * denominator))
    return Fraction(numerator, denominator)


@st.composite
def exponents(draw, max_value=4):
    # 三分之一格点上的非负指数
    return Fraction(draw(st.integers(0, 3 * max_value)), 3)


@st.composite
def novikov_scalars(draw, max_terms=3, nonzero=False):
    # 精确的 Novikov 标量，项数不超过 max_terms
    count = draw(st.integers(1 if nonzero else 0, max_terms))
    terms = [(draw(exponents()), draw(st.integers(-3, 3).filter(bool))) for _ in range(count)]
    value = NovikovScalar.from_terms(terms)
    if nonzero and value.is_zero():
        return NovikovScalar.monomial(1, terms[0][0])
    return value


@st.composite
def lattice_classes(draw, dimension=2, radius=2):
    return tuple(draw(st.integers(-radius, radius)) for _ in range(dimension))


@st.composite
def chart_elements(draw, chart=(0,), max_terms=3):
    # 三角形图表上 T 指数非负的单项式和
    count = draw(st.integers(0, max_terms))
    terms = [
        (draw(exponents()), draw(lattice_classes()), draw(st.integers(-2, 2).filter(bool)))
        for _ in range(count)
    ]
    return AffinoidElement.from_terms(TRIANGLE, chart, terms)


# ------------------------------------------------------------------ Adams
@st.composite
def adams_parameters(draw, max_dimension=5):
    # r ∈ [0,1]^{d-1}，d 取 1..max_dimension
    size = draw(st.integers(0, max_dimension - 1))
    return [Fraction(draw(st.integers(0, 8)), 8) for _ in range(size)]


@st.composite
def adams_samples(draw, max_dimension=5):
    # 参数与 [0, Σr + 1] 内的路径时刻
    r = draw(adams_parameters(max_dimension))
    end = sum(r, Fraction(0)) + 1
    s = end * Fraction(draw(st.integers(0, 24)), 24)
    return r, s


# ------------------------------------------------------------------ Seeds
seeds = st.integers(min_value=0, max_value=2**31 - 1)
