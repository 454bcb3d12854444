"""Two-sided facility location games package."""
