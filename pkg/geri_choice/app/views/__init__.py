from .console import render_appendix, render_panels, render_report, render_solution

__all__ = ["render_appendix", "render_panels", "render_report", "render_solution"]
