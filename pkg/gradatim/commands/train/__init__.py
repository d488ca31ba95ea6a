"""# gradatim.commands.train

Training command module.
"""
