"""Tests for ngon-surfaces."""
