"""tlrewrite - the Temperley-Lieb algebra as diagrams, words, rewriting and category."""

__version__ = "0.3.0"
