"""Static SVG plots with byte-identical output for identical input.

Fixed 400x400 viewport, coordinates printed with three decimals, no
timestamps or generated ids.
"""
from .errors import EmptyData

SIZE = 400
MARGIN = 40
_HEAD = (
    '<?xml version="1.0" encoding="UTF-8"?>\n'
    f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">\n'
    f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>\n'
)


def _f(v):
    return f"{v:.3f}"


def _esc(text):
    return str(text).replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _frame(title, xlabel, ylabel):
    inner = SIZE - 2 * MARGIN
    return [
        f'<rect x="{MARGIN}" y="{MARGIN}" width="{inner}" height="{inner}" fill="none" stroke="black"/>',
        f'<text x="{SIZE / 2:.0f}" y="{MARGIN - 12}" text-anchor="middle" font-size="13">{_esc(title)}</text>',
        f'<text x="{SIZE / 2:.0f}" y="{SIZE - 10}" text-anchor="middle" font-size="11">{_esc(xlabel)}</text>',
        f'<text x="12" y="{SIZE / 2:.0f}" text-anchor="middle" font-size="11" transform="rotate(-90 12 {SIZE / 2:.0f})">{_esc(ylabel)}</text>',
        f'<text x="{MARGIN}" y="{SIZE - MARGIN + 14}" text-anchor="middle" font-size="10">0</text>',
        f'<text x="{SIZE - MARGIN}" y="{SIZE - MARGIN + 14}" text-anchor="middle" font-size="10">1</text>',
    ]


def _to_px(x, y):
    inner = SIZE - 2 * MARGIN
    return MARGIN + x * inner, SIZE - MARGIN - y * inner


def scatter(points, title="", xlabel="x", ylabel="y", radius=1.2):
    """Points in the unit square (x, y) -> SVG document."""
    points = [(float(p[0]), float(p[1])) for p in points]
    if not points:
        raise EmptyData("nothing to plot")
    body = _frame(title, xlabel, ylabel)
    for x, y in points:
        px, py = _to_px(x, y)
        body.append(f'<circle cx="{_f(px)}" cy="{_f(py)}" r="{radius}" fill="black"/>')
    return _HEAD + "\n".join(body) + "\n</svg>\n"


def histogram(counts, edges, title="", xlabel="x", ylabel="count"):
    if not counts or sum(counts) == 0:
        raise EmptyData("nothing to plot")
    body = _frame(title, xlabel, ylabel)
    top = max(counts)
    lo, hi = edges[0], edges[-1]
    span = hi - lo or 1.0
    for c, a, b in zip(counts, edges, edges[1:]):
        if not c:
            continue
        x0, y0 = _to_px((a - lo) / span, c / top)
        x1, y1 = _to_px((b - lo) / span, 0.0)
        body.append(f'<rect x="{_f(x0)}" y="{_f(y0)}" width="{_f(x1 - x0)}" height="{_f(y1 - y0)}" fill="gray" stroke="black"/>')
    body.append(f'<text x="{SIZE - MARGIN}" y="{MARGIN + 12}" text-anchor="end" font-size="10">max {top}</text>')
    return _HEAD + "\n".join(body) + "\n</svg>\n"


def plot_svg(data, style=None):
    """TorusCloud -> torus scatter; ConeReport -> ratio histogram (default)
    or ratio scatter (x = ratio, y = position in sorted order)."""
    from .limits import ConeReport, TorusCloud

    if isinstance(data, TorusCloud):
        if not len(data.points):
            raise EmptyData("empty torus cloud")
        title = f"torus cloud, {len(data.points)} points, {data.statistic_name} = {data.statistic:.4f}"
        return scatter([(p[0], p[1]) for p in data.points], title, "theta_1", "theta_2")
    if isinstance(data, ConeReport):
        if not data.ratios:
            raise EmptyData("empty cone report")
        if style == "scatter":
            n = len(data.ratios)
            pts = [(min(x, 1.0), k / max(n - 1, 1)) for k, x in enumerate(data.ratios)]
            return scatter(pts, f"ratios x2/x1 ({n} directions)", "x2/x1", "rank")
        counts, edges = data.histogram()
        return histogram(counts, edges, f"ratios x2/x1 ({len(data.ratios)} directions)", "x2/x1")
    raise TypeError(f"cannot plot {type(data).__name__}")
