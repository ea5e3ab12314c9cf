# Meixner Asymptotics
__version__ = "1.0.0"
