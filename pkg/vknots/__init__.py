from dotenv import load_dotenv

# Ensure environment variables from .env are loaded as soon as the package is imported
load_dotenv()

__version__ = "1.0"
