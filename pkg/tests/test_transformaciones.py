import math
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st
from pytest import approx, mark, raises
from scipy.special import hyp2f1

from errores import ErrorAridad, ErrorDominio, ErrorRestriccion
from series import EstadoEvaluacion, HypergeometricSpec, eval_pfq, pochhammer
from transformaciones import (
    RELACIONES,
    contiguous_residual,
    euler_transform,
    eval_expression,
    evaluar_desplazamiento,
    funcion_simple,
    kummer_doble,
    kummer_first,
    lados_contiguos,
    pfaff_transform,
    shift_coefficients,
    shift_decompose,
)
from transformaciones_expresiones import CoeficienteParametros, expresion, termino


def test_kummer_primera_transformacion():
    spec = HypergeometricSpec((1,), (2,), 1.0)
    transformada = kummer_first(spec)
    assert len(transformada.terms) == 1
    assert transformada.terms[0].function.argument == -1.0
    assert eval_expression(transformada).value == approx(math.e - 1, rel=1e-13)


def test_kummer_doble_vuelve_al_original():
    spec = HypergeometricSpec((0.3,), (1.7,), -2.5)
    doble = kummer_doble(spec)
    assert doble.terms[0].function.numerator == approx(spec.numerator, rel=1e-15)
    assert doble.terms[0].function.argument == spec.argument
    assert eval_expression(doble).value == approx(eval_pfq(spec).value, rel=1e-12)


def test_kummer_exige_1f1():
    with raises(ErrorAridad):
        kummer_first(HypergeometricSpec((1, 1), (2,), 0.5))


def test_pfaff_lleva_a_la_frontera():
    # 2F1(1,1;2;1/2) = 2·2F1(1,1;2;-1) = 2 ln 2
    transformada = pfaff_transform(HypergeometricSpec((1, 1), (2,), 0.5))
    assert transformada.terms[0].function.argument == -1.0
    assert eval_expression(transformada).value == approx(2 * math.log(2.0), rel=1e-8)
    assert eval_pfq(HypergeometricSpec((1, 1), (2,), 0.5)).value == approx(1.3862944, abs=1e-7)


def test_pfaff_fuera_del_disco():
    transformada = pfaff_transform(HypergeometricSpec((0.3, 0.9), (1.7,), -2.0))
    assert eval_expression(transformada).value == approx(hyp2f1(0.3, 0.9, 1.7, -2.0), rel=1e-12)


def test_euler_y_pfaff_validan_el_argumento():
    with raises(ErrorDominio):
        euler_transform(HypergeometricSpec((0.3, 0.9), (1.7,), -1.0))
    with raises(ErrorDominio):
        pfaff_transform(HypergeometricSpec((0.3, 0.9), (1.7,), 1.0))
    with raises(ErrorAridad):
        euler_transform(HypergeometricSpec((0.3,), (1.7,), 0.5))


@settings(max_examples=200, deadline=None)
@given(
    st.floats(min_value=-3, max_value=3),
    st.floats(min_value=-3, max_value=3),
    st.floats(min_value=0.2, max_value=4),
    st.floats(min_value=-0.85, max_value=0.45),
)
def test_euler_y_pfaff_conservan_el_valor(a, b, c, z):
    spec = HypergeometricSpec((a, b), (c,), z)
    original = eval_pfq(spec)
    for transformada in (euler_transform(spec), pfaff_transform(spec)):
        resultado = eval_expression(transformada)
        escala = max(original.scale, resultado.scale)
        assert abs(resultado.value - original.value) <= 1e-10 * escala


def test_coeficientes_de_desplazamiento_exactos():
    assert shift_coefficients(3, 2) == [Fraction(1), Fraction(2, 3), Fraction(1, 12)]


def test_coeficientes_de_desplazamiento_nulos():
    with raises(ErrorDominio):
        shift_coefficients(-1, 3)


@given(st.integers(1, 10), st.integers(0, 5), st.integers(0, 10))
def test_desplazamiento_reproduce_el_cociente(a, k, n):
    coeficientes = shift_coefficients(Fraction(a), k)
    assert evaluar_desplazamiento(coeficientes, n) == Fraction(pochhammer(a + n, k), pochhammer(a, k))


def test_descomposicion_por_desplazamiento():
    descompuesta = shift_decompose(1, 1, 3, 2, 2, 0.3)
    assert len(descompuesta.terms) == 3
    directa = eval_pfq(HypergeometricSpec((1, 1, 5), (2, 3), 0.3)).value
    assert eval_expression(descompuesta).value == approx(directa, rel=1e-13)


def test_descomposicion_sin_desplazamiento_es_la_2f1():
    descompuesta = shift_decompose(0.4, 1.2, 2.5, 1.5, 0, -0.6)
    assert len(descompuesta.terms) == 1
    assert eval_expression(descompuesta).value == approx(hyp2f1(0.4, 1.2, 1.5, -0.6), rel=1e-13)


def test_descomposicion_valida_denominadores():
    with raises(ErrorDominio):
        shift_decompose(1, 1, -2, 2, 2, 0.3)
    with raises(ErrorDominio):
        shift_decompose(1, 1, 3, 2, 2, 1.0)


@mark.parametrize(
    "relacion asignacion z".split(),
    (
        ("G20", {"a": 0.7, "e": 1.3}, 0.4),
        ("G21", {"a": -1.3, "e": 2.9}, -0.7),
        ("C24", {"a": 0.35, "d": 1.6}, 0.5),
        ("L25", {"a": 0.4, "b": 1.1, "c": 0.8, "d": 1.9}, -0.3),
    ),
)
def test_residuo_contiguo_despreciable(relacion, asignacion, z):
    lados = lados_contiguos(relacion, asignacion, z)
    escala = max(eval_expression(lado).scale for lado in lados)
    assert abs(contiguous_residual(relacion, asignacion, z)) <= 1e-11 * escala


def test_relaciones_registradas():
    assert sorted(RELACIONES) == ["C24", "G20", "G21", "L25"]


def test_relacion_contigua_valida_restricciones():
    with raises(ErrorRestriccion):
        lados_contiguos("G20", {"a": 1.0, "e": -2.0}, 0.3)
    with raises(ErrorDominio):
        lados_contiguos("G20", {"a": 0.7, "e": 1.3}, 1.0)
    with raises(ErrorDominio):
        lados_contiguos("X99", {}, 0.3)


def test_error_de_expresion_indica_el_termino():
    expr = expresion(1.5, termino(1.5, (1,), (2,)), termino(1.5, (1, 1), (2,)))
    with raises(ErrorDominio) as excinfo:
        eval_expression(expr)
    assert excinfo.value.indice_termino == 1
    assert "término 1" in str(excinfo.value)


def test_expresion_que_cancela_pierde_precision():
    restar = (CoeficienteParametros(-1.0),)
    expr = expresion(0.3, termino(0.3, (1, 1), (2,)), termino(0.3, (1, 1), (2,), restar))
    resultado = eval_expression(expr)
    assert resultado.value == 0.0
    assert resultado.status is EstadoEvaluacion.PRECISION_PERDIDA


def test_expresion_simple_coincide_con_la_serie():
    spec = HypergeometricSpec((0.5, 1.5, 2.0), (2.5, 3.0), 0.7)
    assert eval_expression(funcion_simple(spec)).value == eval_pfq(spec).value
