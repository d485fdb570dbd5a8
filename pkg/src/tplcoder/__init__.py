"""Rule-based coding of textual paralanguage in short social-media messages."""

from .detectors import DetectorConfig, detect_all, load_config
from .engine import Coder, annotate
from .model import Annotation, Category, Message, Span, Validity
from .resolver import parse_inline, render_inline, resolve

__version__ = "0.1.0"

__all__ = [
    "Annotation",
    "Category",
    "Coder",
    "DetectorConfig",
    "Message",
    "Span",
    "Validity",
    "annotate",
    "detect_all",
    "load_config",
    "parse_inline",
    "render_inline",
    "resolve",
]
