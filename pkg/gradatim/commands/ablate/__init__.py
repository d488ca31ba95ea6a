"""# gradatim.commands.ablate

Three-arm ablation command module.
"""
