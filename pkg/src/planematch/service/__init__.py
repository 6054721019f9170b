"""HTTP service exposing the core package."""
