"""
Logging do congruence-forge.

Um unico formato para todos os modulos; as mensagens vao para stderr e
stdout fica reservado aos relatorios.
"""

import logging
import sys

LOG_FORMAT = "[%(asctime)s] %(levelname)s %(name)s: %(message)s"


def setup_logging(level: str = "INFO") -> logging.Logger:
    """Configura o logger raiz e devolve o logger do pacote."""
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logging.basicConfig(level=getattr(logging, level.upper(), logging.INFO), handlers=[handler], force=True)
    return logging.getLogger("app")
