"""TRIZ problem-solving engine.

Four-step TRIZ reasoning over a fixed knowledge base through a pluggable
LLM gateway, plus an ideation evaluation harness and the lumped
thermal-network numerics for the flat-heat-pipe battery cooling case.
"""

__version__ = "0.1.0"
