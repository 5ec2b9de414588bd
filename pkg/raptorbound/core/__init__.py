"""Core module containing configuration, models and run metadata."""
