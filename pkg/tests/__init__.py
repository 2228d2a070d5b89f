"""Test package for cyclic_qplane."""
