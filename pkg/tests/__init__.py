"""Test package for relaylink."""
