"""Integration tests for multi-agent architectures (ADK orchestration and Pub/Sub communication)."""
