import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pytest import approx, mark, raises
from scipy.special import gamma, hyp2f1

from errores import ErrorAridad, ErrorDominio
from series import (
    EstadoEvaluacion,
    HypergeometricSpec,
    TipoConvergencia,
    cancelar_parametros,
    classify_convergence,
    entero_no_positivo,
    eval_pfq,
    peor_estado,
    pochhammer,
)


def test_pochhammer_entero_y_fraccion():
    assert pochhammer(3, 4) == 360
    assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
    assert pochhammer(-2, 3) == 0
    assert pochhammer(7.5, 0) == 1


def test_pochhammer_rechaza_n_negativo():
    with raises(ErrorDominio):
        pochhammer(1.0, -1)


@mark.parametrize("valor esperado".split(), ((0.0, 0), (-3.0000000001, -3), (-2.5, None), (1.0, None)))
def test_entero_no_positivo(valor, esperado):
    assert entero_no_positivo(valor) == esperado


def test_2f1_logaritmico():
    resultado = eval_pfq(HypergeometricSpec((1, 1), (2,), -0.5))
    assert resultado.value == approx(math.log(1.5) / 0.5, rel=1e-13)
    assert resultado.status is EstadoEvaluacion.CONVERGIDA
    assert resultado.value == approx(0.8109302, abs=1e-7)


def test_1f1_y_0f0_son_enteras():
    assert eval_pfq(HypergeometricSpec((1,), (2,), 1.0)).value == approx(math.e - 1, rel=1e-13)
    assert eval_pfq(HypergeometricSpec((), (), 2.0)).value == approx(math.exp(2.0), rel=1e-13)


def test_1f0_binomial():
    assert eval_pfq(HypergeometricSpec((0.5,), (), 0.3)).value == approx(0.7 ** -0.5, rel=1e-12)


def test_argumento_cero_devuelve_uno():
    resultado = eval_pfq(HypergeometricSpec((2.5, -1.5, 3), (0.5, 7), 0.0))
    assert resultado.value == 1.0
    assert resultado.terms_used == 1
    assert resultado.tail_estimate == 0.0


def test_serie_terminante_es_exacta():
    resultado = eval_pfq(HypergeometricSpec((-3, 2), (1,), 0.5))
    assert resultado.status is EstadoEvaluacion.TERMINADA
    assert resultado.terms_used == 4
    assert resultado.value == approx(hyp2f1(-3, 2, 1, 0.5), rel=1e-14)


def test_serie_terminante_sin_redondeo_acumulado():
    # con z = -1 los sumandos alternan; en racionales sólo se redondea el resultado
    resultado = eval_pfq(HypergeometricSpec((-20, 1), (-30.5,), -1.0))
    assert resultado.status is EstadoEvaluacion.TERMINADA
    assert resultado.scale == abs(resultado.value)
    esperado = sum(
        (-1) ** k * pochhammer(Fraction(-20), k) * pochhammer(Fraction(1), k)
        / (pochhammer(Fraction(-61, 2), k) * math.factorial(k))
        for k in range(21)
    )
    assert resultado.value == approx(float(esperado), rel=1e-15)


def test_serie_terminante_con_parametro_casi_entero():
    # -4 + 1e-12 se trata como -4: cinco términos y nada más
    resultado = eval_pfq(HypergeometricSpec((-4 + 1e-12, 1.5), (2.5,), 0.9))
    assert resultado.status is EstadoEvaluacion.TERMINADA
    assert resultado.terms_used == 5


def test_cancelacion_numerador_denominador():
    spec = HypergeometricSpec((1.5, 2.0), (1.5,), 0.4)
    reducida = cancelar_parametros(spec)
    assert (reducida.p, reducida.q) == (1, 0)
    assert eval_pfq(spec).value == approx(0.6**-2, rel=1e-13)


def test_frontera_z_uno_gauss():
    # 2F1(1/2,1/2;2;1) = Γ(2)Γ(1)/Γ(3/2)² = 4/π
    resultado = eval_pfq(HypergeometricSpec((0.5, 0.5), (2,), 1.0))
    assert resultado.status is EstadoEvaluacion.MAXIMO_TERMINOS
    esperado = gamma(2.0) * gamma(1.0) / gamma(1.5) ** 2
    assert resultado.value == approx(esperado, rel=1e-6)


def test_frontera_z_menos_uno():
    resultado = eval_pfq(HypergeometricSpec((1, 1), (2,), -1.0))
    assert resultado.value == approx(math.log(2.0), rel=1e-8)


def test_2f1_alternante_se_suma_en_el_argumento_de_pfaff():
    resultado = eval_pfq(HypergeometricSpec((2, 1), (-8.46784,), -0.963263))
    assert resultado.status is EstadoEvaluacion.CONVERGIDA
    assert resultado.value == approx(1.3930722, rel=1e-6)


@mark.parametrize("z", (-0.9, -0.6, -0.51))
def test_2f1_negativo_coincide_con_scipy(z):
    resultado = eval_pfq(HypergeometricSpec((1.3, -2.7), (0.8,), z))
    assert resultado.value == approx(hyp2f1(1.3, -2.7, 0.8, z), rel=1e-11)


def test_cancelacion_se_marca_como_precision_perdida():
    # e^-40 a partir de sumandos de orden e^40
    resultado = eval_pfq(HypergeometricSpec((), (), -40.0))
    assert resultado.status is EstadoEvaluacion.PRECISION_PERDIDA
    assert peor_estado([resultado.status, EstadoEvaluacion.CONVERGIDA]) is EstadoEvaluacion.PRECISION_PERDIDA


def test_cola_informada_no_supera_la_tolerancia():
    resultado = eval_pfq(HypergeometricSpec((1, 1), (2,), 0.05))
    assert resultado.status is EstadoEvaluacion.CONVERGIDA
    assert resultado.tail_estimate <= 1e-13
    assert resultado.value == approx(-math.log(0.95) / 0.05, rel=1e-14)


def test_fuera_del_disco():
    with raises(ErrorDominio):
        eval_pfq(HypergeometricSpec((1, 1), (2,), 1.5))
    # Σb - Σa = 0: no converge en z = 1
    with raises(ErrorDominio):
        eval_pfq(HypergeometricSpec((1, 1), (2,), 1.0))


def test_serie_divergente():
    with raises(ErrorDominio):
        eval_pfq(HypergeometricSpec((1, 1, 1), (2,), 0.1))


def test_denominador_entero_no_positivo():
    with raises(ErrorDominio):
        HypergeometricSpec((1,), (-2,), 0.5)


def test_orden_maximo():
    with raises(ErrorAridad):
        HypergeometricSpec((1, 1, 1, 1, 1), (2, 2, 2, 2), 0.5)


def test_parametros_de_evaluacion_invalidos():
    spec = HypergeometricSpec((1,), (2,), 0.5)
    with raises(ValueError):
        eval_pfq(spec, tol=0.0)
    with raises(ValueError):
        eval_pfq(spec, max_terms=0)


def test_maximo_de_terminos():
    resultado = eval_pfq(HypergeometricSpec((1, 1), (2,), 0.99), max_terms=10)
    assert resultado.status is EstadoEvaluacion.MAXIMO_TERMINOS
    assert resultado.terms_used == 10


@mark.parametrize(
    "numerador denominador tipo frontera".split(),
    (
        ((1,), (2,), TipoConvergencia.ENTERA, False),
        ((1, 1), (3,), TipoConvergencia.DISCO_UNIDAD, True),
        ((1, 1), (2,), TipoConvergencia.DISCO_UNIDAD, False),
        ((1, 1, 1), (2,), TipoConvergencia.DIVERGENTE, False),
        ((-3, 1, 1), (2,), TipoConvergencia.TERMINANTE, False),
    ),
)
def test_clasificacion(numerador, denominador, tipo, frontera):
    clase = classify_convergence(HypergeometricSpec(numerador, denominador, 0.5))
    assert clase.kind is tipo
    assert clase.boundary_convergent is frontera


def test_grado_terminante_es_el_menor():
    clase = classify_convergence(HypergeometricSpec((-5, -2), (1,), 0.5))
    assert clase.terminating_degree == 2


def test_peor_estado():
    estados = [EstadoEvaluacion.CONVERGIDA, EstadoEvaluacion.MAXIMO_TERMINOS, EstadoEvaluacion.TERMINADA]
    assert peor_estado(estados) is EstadoEvaluacion.MAXIMO_TERMINOS
    assert peor_estado([]) is EstadoEvaluacion.CONVERGIDA


@settings(max_examples=200, deadline=None)
@given(
    st.floats(min_value=-2.5, max_value=2.5),
    st.floats(min_value=-2.5, max_value=2.5),
    st.floats(min_value=0.3, max_value=4.0),
    st.floats(min_value=-0.8, max_value=0.8),
)
def test_2f1_coincide_con_scipy(a, b, c, z):
    resultado = eval_pfq(HypergeometricSpec((a, b), (c,), z))
    assert resultado.scale >= abs(resultado.value)
    assert abs(resultado.value - hyp2f1(a, b, c, z)) <= 1e-9 * resultado.scale


_DIADICOS = st.integers(min_value=-5 * 2**20, max_value=5 * 2**20).map(lambda k: Fraction(k, 2**20))


@settings(max_examples=200, deadline=None)
@given(_DIADICOS, st.integers(min_value=0, max_value=20), st.integers(min_value=0, max_value=20))
def test_pochhammer_se_parte(a, m, n):
    assert pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + m, n)
    flotante = float(a)
    assert pochhammer(flotante, m + n) == approx(pochhammer(flotante, m) * pochhammer(flotante + m, n), rel=1e-12)
