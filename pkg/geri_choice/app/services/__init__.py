from .export_service import ExportService

__all__ = ["ExportService"]
