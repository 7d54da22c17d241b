"""Domain features - closed-form statistics, BER chains, link simulation, and numerical oracles."""
