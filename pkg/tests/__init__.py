"""einflag test suite."""
