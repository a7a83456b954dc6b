import math

from pytest import approx, mark, raises

from errores import ErrorDominio, ErrorRestriccion
from reducciones import (
    caminos_disponibles,
    catalog,
    closed_form,
    instantiate_sides,
    lados_impresos_e6,
    lookup,
    tabla_catalogo,
    terminating_closed_form,
)
from series import EstadoEvaluacion
from transformaciones import eval_expression
from verificacion import SamplingPlan, sample_bindings, verify_identity

IDS = ("E3", "E4", "E5", "E6", "T7", "T8", "T9", "R32", "R33", "R34",
       "S35", "S36", "S37", "S38", "S39", "S40", "S41")

REPRESENTATIVOS = (
    ("E3", {"a": 0.7, "b": 2.3}, 0.4),
    ("E4", {"h": 0.6, "a": 0.7, "b": 2.3}, 0.3),
    ("E5", {"a": 0.7, "e": 1.3}, -0.6),
    ("E6", {"a": 0.35, "d": 1.6}, 0.5),
    ("T7", {"a": 1.5, "b": 3.2, "n": 3}, 1.0),
    ("T8", {"a": 1.5, "b": 0.8, "n": 4}, 1.0),
    ("T9", {"a": 1.5, "b": 0.8, "n": 4}, 1.0),
    ("R32", {"a": 0.7, "b": 1.3}, 0.6),
    ("R33", {"a": 0.7, "b": 1.3}, 0.6),
    ("R34", {"a": 0.7, "b": 1.3}, 0.6),
    ("S35", {"n": 2.5}, 0.5),
    ("S36", {}, 0.5),
    ("S37", {"b": 1.0}, 0.75),
    ("S38", {"b": 1.3}, 0.3),
    ("S39", {}, 0.25),
    ("S40", {"a": 1.0}, 0.25),
    ("S41", {"a": 0.7}, 0.3),
)


def _coinciden(x, y, tol=1e-9):
    escala = max(x.scale, y.scale, 1.0)
    return abs(x.value - y.value) <= tol * escala


def test_catalogo_completo_y_ordenado():
    assert tuple(registro.id for registro in catalog()) == IDS


def test_busqueda_desconocida():
    with raises(ErrorDominio):
        lookup("X1")


def test_tabla_catalogo():
    tabla = tabla_catalogo()
    assert list(tabla.columns) == ["id", "formula", "parametros", "restricciones", "dominio", "caminos"]
    assert len(tabla) == 17
    fila = tabla.set_index("id").loc["S36"]
    assert fila["parametros"] == "-"
    assert fila["dominio"] == "(-1, 1]"


def test_caminos_disponibles():
    assert caminos_disponibles(lookup("S36")) == ["lhs", "rhs", "forma_cerrada", "alternativa", "cuadratura"]
    assert caminos_disponibles(lookup("T7")) == ["lhs", "rhs"]
    assert caminos_disponibles(lookup("E3"))[2:] == ["intermedia_separada", "intermedia_kummer", "intermedia_comun"]


@mark.parametrize("identidad asignacion z".split(), REPRESENTATIVOS)
def test_lados_coinciden(identidad, asignacion, z):
    lhs, rhs = instantiate_sides(identidad, asignacion, z)
    assert _coinciden(eval_expression(lhs), eval_expression(rhs))


@mark.parametrize(
    "identidad asignacion z".split(),
    [fila for fila in REPRESENTATIVOS if fila[0].startswith("E")],
)
def test_formas_intermedias_coinciden(identidad, asignacion, z):
    registro = lookup(identidad)
    lhs = eval_expression(instantiate_sides(identidad, asignacion, z)[0])
    for nombre, construir in registro.intermedias:
        assert _coinciden(eval_expression(construir(asignacion, z)), lhs), nombre


@mark.parametrize(
    "identidad asignacion z".split(),
    [fila for fila in REPRESENTATIVOS if fila[0][0] in "RS"],
)
def test_forma_cerrada_coincide_con_la_serie(identidad, asignacion, z):
    lhs = eval_expression(instantiate_sides(identidad, asignacion, z)[0])
    assert closed_form(identidad, asignacion, z) == approx(lhs.value, rel=1e-9)


def test_s36_en_la_frontera():
    assert closed_form("S36", {}, 1.0) == approx(4 * math.log(2.0), rel=1e-14)
    lhs, _ = instantiate_sides("S36", {}, 1.0)
    assert eval_expression(lhs).value == approx(4 * math.log(2.0), rel=1e-6)


def test_s36_en_un_medio():
    esperado = -8 * math.log((1 + math.sqrt(0.5)) / 2)
    assert closed_form("S36", {}, 0.5) == approx(esperado, rel=1e-14)
    assert esperado == approx(1.2667776, abs=1e-7)


@mark.parametrize(
    "identidad asignacion z esperado".split(),
    (
        ("S37", {"b": 1.0}, 0.75, 16 / 9),
        ("S39", {}, 0.25, math.log(3.0)),
        ("S40", {"a": 1.0}, 0.25, 20 / 9),
    ),
)
def test_valores_exactos(identidad, asignacion, z, esperado):
    assert closed_form(identidad, asignacion, z) == approx(esperado, rel=1e-14)


def test_forma_cerrada_en_cero():
    assert closed_form("S36", {}, 0.0) == 1.0
    assert closed_form("S35", {"n": 2.5}, 0.0) == 1.0


def test_suma_terminante_t9():
    lhs, _ = instantiate_sides("T9", {"a": 1.5, "b": 0.8, "n": 4}, 1.0)
    cociente = terminating_closed_form("T9", {"a": 1.5, "b": 0.8}, 4)
    assert cociente == approx(eval_expression(lhs).value, rel=1e-12)
    assert terminating_closed_form("T9", {"a": 1.5, "b": 0.8}, 0) == 1.0


@mark.parametrize("identidad semilla".split(), (("T7", 11), ("T8", 12), ("T9", 13)))
def test_sumas_terminantes_en_cien_sorteos(identidad, semilla):
    registro = lookup(identidad)
    asignaciones = sample_bindings(registro, SamplingPlan(seed=semilla, samples_per_identity=100))
    assert max(v["n"] for v in asignaciones) > 12
    for v in asignaciones:
        lhs = eval_expression(registro.lhs_builder(v, 1.0))
        assert lhs.status is EstadoEvaluacion.TERMINADA
        assert lhs.value == approx(registro.cociente(v, int(v["n"])), rel=1e-12, abs=1e-300), v


def test_t8_con_sumandos_que_cancelan():
    a = round(3.0289 * 2**24) / 2**24
    b = round(4.5848 * 2**24) / 2**24
    lhs, _ = instantiate_sides("T8", {"a": a, "b": b, "n": 17}, 1.0)
    cociente = terminating_closed_form("T8", {"a": a, "b": b}, 17)
    assert eval_expression(lhs).value == approx(cociente, rel=1e-12)
    assert cociente == approx(0.0080785, rel=1e-4)


def test_suma_terminante_exige_registro_terminante():
    with raises(ErrorDominio):
        terminating_closed_form("S36", {}, 2)


@mark.parametrize("b", (0.5 + 1e-5, 0.5 - 3e-5, 0.5 + 2e-3))
def test_s38_cerca_de_un_medio(b):
    lhs = eval_expression(instantiate_sides("S38", {"b": b}, 0.3)[0])
    assert closed_form("S38", {"b": b}, 0.3) == approx(lhs.value, rel=1e-10)


@mark.parametrize("b", (0.5 + 1e-6, 0.5 - 1e-6))
@mark.parametrize("z", (0.1, 0.25, 0.5))
def test_s38_junto_a_un_medio_tiende_a_s39(b, z):
    assert closed_form("S38", {"b": b}, z) == approx(closed_form("S39", {}, z), rel=1e-5)


def test_s38_en_un_medio_es_s39():
    assert closed_form("S38", {"b": 0.5}, 0.3) == approx(closed_form("S39", {}, 0.3), rel=1e-14)


@mark.parametrize("a", (-4.7339, -3.2, -0.6))
@mark.parametrize("z", (0.75, 0.92787))
def test_s41_con_a_negativo(a, z):
    lhs = eval_expression(instantiate_sides("S41", {"a": a}, z)[0])
    assert closed_form("S41", {"a": a}, z) == approx(lhs.value, rel=1e-9)


def test_s41_en_el_plan_completo():
    reporte = verify_identity(lookup("S41"), SamplingPlan(seed=1, samples_per_identity=100))
    assert reporte.passed, reporte.errores[:3] or [c.diagnostico for c in reporte.comparisons if not c.passed][:3]


def test_e6_impresa_no_es_identidad():
    izquierdo, derecho = lados_impresos_e6({"a": 0.35, "d": 1.6}, 0.5)
    assert abs(eval_expression(izquierdo).value - eval_expression(derecho).value) > 1e-3


def test_restriccion_violada():
    with raises(ErrorRestriccion) as excinfo:
        instantiate_sides("E3", {"a": 0.7, "b": 0.0}, 0.4)
    assert excinfo.value.identidad == "E3"


def test_argumento_fuera_del_dominio():
    with raises(ErrorDominio):
        instantiate_sides("R34", {"a": 0.7, "b": 1.3}, -0.5)
    with raises(ErrorDominio):
        instantiate_sides("E4", {"h": 0.6, "a": 0.7, "b": 2.3}, 0.7)


def test_parametro_faltante_o_sobrante():
    with raises(ErrorRestriccion):
        instantiate_sides("E3", {"a": 0.7}, 0.4)
    with raises(ErrorRestriccion):
        instantiate_sides("S36", {"a": 1.0}, 0.5)


def test_sin_forma_cerrada():
    with raises(ErrorDominio):
        closed_form("E3", {"a": 0.7, "b": 2.3}, 0.4)
