"""
Módulo de excepciones propias de la librería de reducciones hipergeométricas.
Todas heredan de ErrorHipergeometrico para que el punto de entrada pueda
capturarlas en un solo bloque.
"""


class ErrorHipergeometrico(Exception):
    """Excepción base de la librería."""


class ErrorDominio(ErrorHipergeometrico, ValueError):
    """
    Argumento o parámetro fuera del dominio de una función o transformación.

    Args:
        mensaje (str): Descripción del problema
        indice_termino (int, optional): Índice del término de una expresión que falló
    """

    def __init__(self, mensaje, indice_termino=None):
        self.indice_termino = indice_termino
        if indice_termino is not None:
            mensaje = f"término {indice_termino}: {mensaje}"
        super().__init__(mensaje)


class ErrorAridad(ErrorHipergeometrico, ValueError):
    """La función recibida no tiene el orden (p, q) que exige la operación."""


class ErrorRestriccion(ErrorHipergeometrico, ValueError):
    """
    Una asignación de parámetros viola una restricción de una identidad.

    Args:
        combinacion (str): Combinación afín violada, p. ej. '1+a-b'
        asignacion (dict): Valores de los parámetros
        identidad (str, optional): Clave del catálogo
    """

    def __init__(self, combinacion, asignacion, identidad=None, detalle=""):
        self.combinacion = combinacion
        self.asignacion = dict(asignacion)
        self.identidad = identidad
        prefijo = f"{identidad}: " if identidad else ""
        texto = f"{prefijo}restricción violada por '{combinacion}' con {self.asignacion}"
        if detalle:
            texto = f"{texto} ({detalle})"
        super().__init__(texto)


class ErrorAgotamientoMuestreo(ErrorHipergeometrico):
    """El muestreo rechazó más del 99% de los intentos."""


class ErrorConvergenciaCuadratura(ErrorHipergeometrico):
    """
    La cuadratura no alcanzó la tolerancia pedida.

    Args:
        mensaje (str): Descripción del problema
        estimacion: Mejor IntegralEstimate obtenido
    """

    def __init__(self, mensaje, estimacion=None):
        self.estimacion = estimacion
        super().__init__(mensaje)


class ErrorUso(ErrorHipergeometrico):
    """Error de uso de la línea de comandos (código de salida 2)."""


class ErrorPrecision(ErrorHipergeometrico):
    """Una suma perdió más dígitos por cancelación de los que admite PERDIDA_MAXIMA."""


class ErrorEvaluacion(ErrorHipergeometrico):
    """
    Falla numérica al evaluar una identidad o un oráculo ya validados.

    Args:
        identidad (str): Clave de la identidad o representación
        asignacion (dict): Valores de los parámetros
        z (float): Argumento
        detalle (str): Descripción del fallo original
    """

    def __init__(self, identidad, asignacion, z, detalle):
        self.identidad = identidad
        self.asignacion = dict(asignacion)
        self.z = z
        super().__init__(f"{identidad} con {self.asignacion} y z = {z!r}: {detalle}")
