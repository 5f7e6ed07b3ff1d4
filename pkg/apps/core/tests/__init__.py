"""Tests for the core application."""
