import math

from pytest import approx, mark, raises

import verificacion_identidades
from errores import ErrorPrecision
from exportacion import deserializar, documento_reportes, serializar
from reducciones import lookup
from verificacion import (
    CLAVES_ORACULOS,
    CLAVES_RELACIONES,
    ComparisonPolicy,
    SamplingPlan,
    VerificationReport,
    claves_suite,
    compare,
    sample_bindings,
    sample_bindings_con_conteo,
    suite_aprobada,
    verificar_oraculo,
    verificar_relacion,
    verify_identity,
    verify_suite,
)


def test_comparacion_interior():
    politica = ComparisonPolicy()
    assert compare(1.0, 1.0 + 1e-10, politica, boundary=False).passed
    resultado = compare(1.0, 1.001, politica, boundary=False)
    assert not resultado.passed
    assert "error relativo" in resultado.diagnostico


def test_comparacion_por_niveles():
    politica = ComparisonPolicy()
    assert not compare(1.0, 1.0 + 1e-7, politica, boundary=False).passed
    assert compare(1.0, 1.0 + 1e-7, politica, boundary=True).passed
    assert not compare(1.0, 1.0 + 5e-9, politica, boundary=False).passed
    assert compare(1.0, 1.0 + 5e-9, politica, boundary=False, oraculo=True).passed


def test_comparacion_con_escala_solo_diagnostica():
    # dos valores diminutos que provienen de sumandos de orden uno: la escala no los aprueba
    resultado = compare(1e-12, 2e-12, ComparisonPolicy(), boundary=False, escala=1.0)
    assert not resultado.passed
    assert resultado.rel_error == approx(0.5)
    assert "sumandos de magnitud 1.000e+00" in resultado.diagnostico


def test_comparacion_estricta_con_cancelacion():
    resultado = compare(8.905e-05, -5.573e-05, ComparisonPolicy(), boundary=True, escala=3.2)
    assert not resultado.passed
    assert resultado.rel_error == approx(1.6258, rel=1e-4)


def test_comparacion_no_finita():
    resultado = compare(math.nan, 1.0, ComparisonPolicy(), boundary=False)
    assert not resultado.passed
    assert resultado.rel_error == math.inf


@mark.parametrize(
    "argumentos",
    ({"tol_rel": 0.0}, {"tol_rel": 1e-5}, {"abs_floor": -1.0}, {"tol_rel_oraculo": 0.0}),
)
def test_politica_invalida(argumentos):
    with raises(ValueError):
        ComparisonPolicy(**argumentos)


@mark.parametrize(
    "argumentos",
    ({"seed": -1}, {"seed": 2**64}, {"samples_per_identity": -1}, {"parameter_range": (1.0, 1.0)}),
)
def test_plan_invalido(argumentos):
    with raises(ValueError):
        SamplingPlan(**argumentos)


def test_muestreo_determinista():
    plan = SamplingPlan(seed=42, samples_per_identity=5)
    registro = lookup("E3")
    primera = sample_bindings(registro, plan)
    assert primera == sample_bindings(registro, plan)
    assert len(primera) == 5
    assert primera != sample_bindings(registro, SamplingPlan(seed=43, samples_per_identity=5))


def test_muestreo_de_enteros():
    asignaciones = sample_bindings(lookup("T8"), SamplingPlan(seed=42, samples_per_identity=20))
    for asignacion in asignaciones:
        assert asignacion["n"] == int(asignacion["n"])
        assert 0 <= asignacion["n"] <= 20
        assert -5.0 <= asignacion["a"] <= 5.0


def test_muestreo_alcanza_el_tope_de_enteros():
    asignaciones = sample_bindings(lookup("T9"), SamplingPlan(seed=1, samples_per_identity=100))
    assert 12 < max(asignacion["n"] for asignacion in asignaciones) <= 20


def test_muestreo_en_rejilla_diadica():
    for asignacion in sample_bindings(lookup("S41"), SamplingPlan(seed=5, samples_per_identity=30)):
        assert (asignacion["a"] * 2**24).is_integer()
        assert -5.0 <= asignacion["a"] <= 5.0


def test_muestreo_sin_parametros():
    asignaciones, rechazos = sample_bindings_con_conteo(lookup("S36"), SamplingPlan(samples_per_identity=3))
    assert asignaciones == [{}, {}, {}]
    assert rechazos == 0


def test_e5_en_la_rejilla(politica):
    plan = SamplingPlan(seed=7, samples_per_identity=3, z_grid=(-0.8, -0.5, -0.1, 0.1, 0.5, 0.8), z_aleatorios=0)
    reporte = verify_identity(lookup("E5"), plan, politica)
    assert reporte.passed
    assert len(reporte.comparisons) > 0
    assert reporte.max_rel_error <= politica.tol_rel_boundary


def test_s36_incluye_la_frontera(plan_pequeno, politica):
    reporte = verify_identity(lookup("S36"), plan_pequeno, politica)
    assert reporte.passed
    en_uno = [c for c in reporte.comparisons if c.z == 1.0]
    assert en_uno
    assert all(c.boundary for c in en_uno)


def test_asignacion_inyectada_que_viola_restricciones(politica):
    plan = SamplingPlan(samples_per_identity=0, z_aleatorios=0)
    reporte = verify_identity(
        lookup("E3"), plan, politica, bindings_extra=[{"a": 0.7, "b": 0.0}, {"a": 0.7, "b": 2.3}]
    )
    assert reporte.samples_rejected == 1
    assert reporte.samples_attempted == 2
    assert reporte.comparisons
    assert all(c.bindings == {"a": 0.7, "b": 2.3} for c in reporte.comparisons)
    assert reporte.passed


def test_plan_sin_muestras(politica):
    reporte = verify_identity(lookup("R32"), SamplingPlan(samples_per_identity=0), politica)
    assert reporte.passed
    assert reporte.sin_datos
    assert reporte.comparisons == ()


def test_s37_tres_caminos(politica):
    plan = SamplingPlan(samples_per_identity=0, z_grid=(0.3, 0.6), z_aleatorios=0)
    reporte = verify_identity(lookup("S37"), plan, politica, bindings_extra=[{"b": 1.0}])
    assert reporte.passed
    parejas = {c.paths for c in reporte.comparisons}
    assert ("forma_cerrada", "cuadratura") in parejas
    assert ("lhs", "forma_cerrada") in parejas


def test_pfaff_solo_por_debajo_de_un_medio(politica):
    plan = SamplingPlan(seed=7, samples_per_identity=2, z_grid=(-0.5, 0.25, 0.6, 0.75), z_aleatorios=0)
    reporte = verificar_relacion("REL-EULER-PFAFF", plan, politica)
    assert reporte.passed
    for comparacion in reporte.comparisons:
        if comparacion.z >= 0.5:
            assert "pfaff" not in comparacion.paths


@mark.parametrize("clave", CLAVES_RELACIONES)
def test_relaciones_aprobadas(clave, plan_pequeno, politica):
    reporte = verificar_relacion(clave, plan_pequeno, politica)
    assert reporte.identity_id == clave
    assert reporte.passed
    assert not reporte.sin_datos


@mark.parametrize("clave", CLAVES_ORACULOS)
def test_oraculos_aprobados(clave, plan_pequeno, politica):
    reporte = verificar_oraculo(clave.removeprefix("ORA-"), plan_pequeno, politica)
    assert reporte.identity_id == clave
    assert reporte.passed
    assert all(0.05 <= c.z <= 0.9 for c in reporte.comparisons)


def test_suite_sin_muestras(politica):
    reportes = verify_suite(SamplingPlan(samples_per_identity=0), politica)
    assert [r.identity_id for r in reportes] == list(claves_suite())
    assert len(reportes) == 25
    assert all(r.sin_datos for r in reportes)
    assert suite_aprobada(reportes)


def test_suite_completa_y_concurrente(plan_pequeno, politica):
    reportes = verify_suite(plan_pequeno, politica)
    assert suite_aprobada(reportes), [r.identity_id for r in reportes if not r.passed]
    concurrentes = verify_suite(plan_pequeno, politica, workers=4)
    documento = documento_reportes(reportes, plan_pequeno, politica)
    assert serializar(documento) == serializar(documento_reportes(concurrentes, plan_pequeno, politica))


def test_suite_en_el_plan_de_aceptacion(politica):
    reportes = verify_suite(SamplingPlan(), politica, workers=4)
    assert suite_aprobada(reportes), [r.identity_id for r in reportes if not r.passed]
    assert all(r.descartadas <= 0.1 * r.evaluaciones for r in reportes)


def test_descartes_dentro_del_margen():
    reporte = VerificationReport.construir("E3", 10, 0, (), (), descartadas=1, evaluaciones=10)
    assert reporte.passed
    assert reporte.a_dict()["descartadas"] == 1


def test_demasiados_descartes_hacen_fallar():
    reporte = VerificationReport.construir("E3", 10, 0, (), (), descartadas=2, evaluaciones=10)
    assert not reporte.passed
    assert reporte.errores == ("2 de 10 evaluaciones sin precisión suficiente",)


def test_evaluaciones_sin_precision_se_descartan(monkeypatch, politica):
    def sin_precision(registro, valores, z):
        raise ErrorPrecision("precisión perdida")

    monkeypatch.setattr(verificacion_identidades, "caminos_registro", sin_precision)
    plan = SamplingPlan(seed=3, samples_per_identity=2, z_aleatorios=0)
    reporte = verify_identity(lookup("E3"), plan, politica)
    assert reporte.comparisons == ()
    assert reporte.descartadas == reporte.evaluaciones > 0
    assert not reporte.passed
    assert not reporte.sin_datos


def test_serializacion_determinista(plan_pequeno, politica):
    def texto():
        reporte = verify_identity(lookup("S39"), plan_pequeno, politica)
        return serializar(documento_reportes([reporte], plan_pequeno, politica))

    primero = texto()
    assert primero == texto()
    assert primero.endswith("\n")
    documento = deserializar(primero)
    assert documento["aprobado"] is True
    assert documento["plan"]["seed"] == 7
    assert serializar(documento) == primero


def test_serializacion_de_no_finitos(politica):
    plan = SamplingPlan(samples_per_identity=0)
    documento = documento_reportes([], plan, politica)
    documento["extra"] = [math.inf, math.nan, 1.5]
    assert deserializar(serializar(documento))["extra"] == [None, None, 1.5]
