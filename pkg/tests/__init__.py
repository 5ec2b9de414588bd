"""Tests for raptorbound."""
