"""Tests for the two-sided facility location toolkit."""
