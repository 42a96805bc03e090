from __future__ import annotations

from functools import partial
from typing import Any


class GraphCyclesError(Exception):
    """Base de todas as falhas reportadas pela biblioteca."""


class InvalidParameterError(GraphCyclesError, ValueError):
    """Parâmetro fora do domínio aceito por uma operação."""

    def __init__(self, message: str, *, parameter: str | None = None, value: Any = None) -> None:
        self.parameter = parameter or ""
        self.value = value
        super().__init__(message)


class GraphFormatError(InvalidParameterError):
    """Arquivo de grafo malformado."""

    def __init__(self, message: str, *, line_number: int | None = None) -> None:
        self.line_number = line_number
        prefix = f"linha {line_number}: " if line_number is not None else ""
        super().__init__(f"{prefix}{message}", parameter="graph_file")


class ConstructionError(GraphCyclesError, RuntimeError):
    """Construção aleatória esgotou as tentativas permitidas."""

    def __init__(self, *, construction: str, attempts: int, detail: str | None = None) -> None:
        self.construction = construction
        self.attempts = attempts
        self.detail = detail
        message = f"Falha ao construir {construction} após {attempts} tentativas"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)

    def __reduce__(self):
        return partial(type(self), construction=self.construction, attempts=self.attempts, detail=self.detail), ()


class ReportWriteError(GraphCyclesError, OSError):
    """Falha de escrita de um artefato em disco."""

    def __init__(self, *, path: str, reason: str | None = None) -> None:
        self.path = path
        self.reason = reason or ""
        message = f"Não foi possível gravar {path}"
        if reason:
            message = f"{message}: {reason}"
        super().__init__(message)

    def __reduce__(self):
        return partial(type(self), path=self.path, reason=self.reason or None), ()


def require(condition: bool, message: str, *, parameter: str, value: Any = None) -> None:
    if not condition:
        raise InvalidParameterError(message, parameter=parameter, value=value)


__all__ = [
    "ConstructionError",
    "GraphCyclesError",
    "GraphFormatError",
    "InvalidParameterError",
    "ReportWriteError",
    "require",
]
