"""CLI for raptorbound."""
