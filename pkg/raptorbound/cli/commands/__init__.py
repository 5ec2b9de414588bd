"""CLI commands for raptorbound."""
