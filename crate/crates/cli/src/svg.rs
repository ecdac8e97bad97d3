//! Chord-diagram SVG emitter: vertices on a circle colored by class,
//! straight-line edges, crossing count annotated below.

use convex_crossings::ConvexDrawing;

const PALETTE: [&str; 12] = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6", "#bcf60c",
    "#008080", "#9a6324", "#800000", "#808000",
];

const RADIUS: f64 = 100.0;

pub fn render(drawing: &ConvexDrawing) -> String {
    let n = drawing.order().len();
    let point = |pos: usize| {
        let angle = std::f64::consts::TAU * pos as f64 / n as f64 - std::f64::consts::FRAC_PI_2;
        (RADIUS * angle.cos(), RADIUS * angle.sin())
    };

    let mut out = String::new();
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-120 -120 240 260\" width=\"480\" height=\"520\">\n",
    );
    // guide ring as a path so <circle> elements map 1:1 to vertices
    out.push_str("  <path d=\"M 0 -100 A 100 100 0 1 1 0 100 A 100 100 0 1 1 0 -100\" fill=\"none\" stroke=\"#ddd\" stroke-width=\"1\"/>\n");

    let classes = drawing.class_sequence();
    for (u, v) in drawing.spec().edges() {
        let (x1, y1) = point(drawing.position_of(u));
        let (x2, y2) = point(drawing.position_of(v));
        out.push_str(&format!(
            "  <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"#555\" stroke-width=\"0.7\" stroke-opacity=\"0.6\"/>\n"
        ));
    }
    for pos in 0..n {
        let (x, y) = point(pos);
        let color = PALETTE[classes[pos] % PALETTE.len()];
        out.push_str(&format!(
            "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"4\" fill=\"{color}\" stroke=\"black\" stroke-width=\"0.5\"/>\n"
        ));
    }
    out.push_str(&format!(
        "  <text x=\"0\" y=\"130\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">crossings: {}</text>\n",
        drawing.count_crossings()
    ));
    out.push_str("</svg>\n");
    out
}
