"""One-call annotation: segment, detect, resolve."""

from __future__ import annotations

from typing import Optional, Union

from .detectors import DetectorConfig, default_resources, detect_all
from .lexicons import Resources
from .model import Annotation, Message
from .resolver import resolve
from .tokenizer import segment


class Coder:
    """Holds a configuration and loaded resources; safe to share across threads."""

    def __init__(self, config: Optional[DetectorConfig] = None, resources: Optional[Resources] = None):
        self.config = config or DetectorConfig()
        self.resources = resources or default_resources()

    def annotate(self, message: Union[Message, str]) -> list[Annotation]:
        text = message.text if isinstance(message, Message) else message
        tokens = segment(text, split_hashtags=not self.config.hashtags_opaque)
        candidates = detect_all(message, self.config, self.resources, tokens=tokens)
        return resolve(message, candidates, self.config)


_DEFAULT: Optional[Coder] = None


def annotate(message: Union[Message, str], config: Optional[DetectorConfig] = None) -> list[Annotation]:
    global _DEFAULT
    if config is not None:
        return Coder(config).annotate(message)
    if _DEFAULT is None:
        _DEFAULT = Coder()
    return _DEFAULT.annotate(message)
