from fractions import Fraction

from pytest import approx, mark, raises

from errores import ErrorRestriccion
from restricciones import Combinacion, ConstraintSet, validar_parametros


@mark.parametrize(
    "texto asignacion esperado".split(),
    (
        ("2b-n+1", {"b": 0.8, "n": 4}, -1.4),
        ("1+a-b", {"a": 0.7, "b": 2.3}, -0.6),
        ("a/2+e/2", {"a": 0.7, "e": 1.3}, 1.0),
        ("-2b", {"b": 0.8}, -1.6),
        ("3", {}, 3.0),
    ),
)
def test_combinacion_desde_texto(texto, asignacion, esperado):
    assert Combinacion.desde_texto(texto).evaluar(asignacion) == approx(esperado, rel=1e-14)


def test_combinacion_agrupa_coeficientes():
    combinacion = Combinacion.desde_texto("a+a/2-1/2")
    assert combinacion.coeficientes == (("a", Fraction(3, 2)),)
    assert combinacion.constante == Fraction(-1, 2)
    assert combinacion.variables == ("a",)


@mark.parametrize("texto", ("a*b", "2+", "a^2"))
def test_combinacion_invalida(texto):
    with raises(ValueError):
        Combinacion.desde_texto(texto)


def test_verificar_excluye_enteros_no_positivos():
    restricciones = ConstraintSet.crear(exclusiones=("1+a-b",))
    restricciones.verificar({"a": 0.7, "b": 2.3})
    with raises(ErrorRestriccion) as excinfo:
        restricciones.verificar({"a": 0.5, "b": 2.5}, "E3")
    assert excinfo.value.combinacion == "1+a-b"
    assert "E3" in str(excinfo.value)


def test_verificar_no_nulas_y_enteros():
    restricciones = ConstraintSet.crear(no_nulas=("b",), enteros={"n": 3})
    restricciones.verificar({"b": 1.0, "n": 2.0})
    with raises(ErrorRestriccion):
        restricciones.verificar({"b": 0.0, "n": 2.0})
    with raises(ErrorRestriccion):
        restricciones.verificar({"b": 1.0, "n": 2.5})
    with raises(ErrorRestriccion):
        restricciones.verificar({"b": 1.0, "n": -1.0})


def test_cotas_inferiores():
    restricciones = ConstraintSet.crear(cotas_inferiores={"a": 0.05})
    restricciones.verificar({"a": 0.05})
    with raises(ErrorRestriccion):
        restricciones.verificar({"a": 0.01})


def test_combinacion_cercana():
    restricciones = ConstraintSet.crear(exclusiones=("c",), no_nulas=("b",))
    assert restricciones.combinacion_cercana({"b": 1.0, "c": -1.9999}, 1e-3) == "c"
    assert restricciones.combinacion_cercana({"b": 5e-4, "c": 0.5}, 1e-3) == "b"
    assert restricciones.combinacion_cercana({"b": 1.0, "c": 1.9999}, 1e-3) is None


def test_describir():
    restricciones = ConstraintSet.crear(
        exclusiones=("a/2",), no_nulas=("b",), enteros={"n": None}, cotas_inferiores={"a": 0.05}
    )
    assert restricciones.describir() == ["a/2 ∉ {0,-1,-2,...}", "b ≠ 0", "n ∈ {0,1,2,...}", "a ≥ 0.05"]
    assert restricciones.enteros == {"n": None}


def test_validar_parametros():
    assert validar_parametros({"a": 1, "b": 2}, ("a", "b")) == {"a": 1.0, "b": 2.0}
    with raises(ErrorRestriccion, match="faltante"):
        validar_parametros({"a": 1}, ("a", "b"))
    with raises(ErrorRestriccion, match="desconocido"):
        validar_parametros({"a": 1, "b": 2, "c": 3}, ("a", "b"))


def test_combinacion_vacia_es_cero():
    assert Combinacion.desde_texto("").evaluar({}) == 0.0
