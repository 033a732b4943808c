# resilmax/ascii.py
"""
ascii.py

Provides a class for rendering the CLI banner using the Rich library.
"""

from rich.console import Console
from rich.panel import Panel


class AsciiArtDisplayer:
    """
    A class to handle displaying the banner using the Rich library.
    """

    def __init__(self, console: Console | None = None) -> None:
        self.console = console or Console()

    def display(self) -> None:
        """
        Displays the banner within a styled Rich panel.
        """
        art: str = r"""
  ____           _ _ __  __
 |  _ \ ___  ___(_) |  \/  | __ ___  __
 | |_) / _ \/ __| | | |\/| |/ _` \ \/ /
 |  _ <  __/\__ \ | | |  | | (_| |>  <
 |_| \_\___||___/_|_|_|  |_|\__,_/_/\_\

        """
        panel: Panel = Panel.fit(
            art,
            title=None,
            subtitle="Resilient submodular maximization",
            border_style="bold green",
        )
        self.console.print(panel)
