"""Static detection of Angular code smells in TypeScript projects."""

__version__ = "0.1.0"
