use std::fmt::Write as _;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 50.0;
const COLORS: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
];

/// Minimal SVG line plot: one polyline per series, a frame, axis ranges and
/// a legend.
pub fn line_plot(title: &str, x_label: &str, x: &[f64], series: &[(String, Vec<f64>)]) -> String {
    let finite = |v: &f64| v.is_finite();
    let (x_lo, x_hi) = range(x.iter().copied().filter(finite));
    let (y_lo, y_hi) = range(series.iter().flat_map(|(_, v)| v.iter().copied().filter(finite)));
    let px = |v: f64| MARGIN + (v - x_lo) / (x_hi - x_lo) * (WIDTH - 2.0 * MARGIN);
    let py = |v: f64| HEIGHT - MARGIN - (v - y_lo) / (y_hi - y_lo) * (HEIGHT - 2.0 * MARGIN);

    let mut s = String::new();
    let w = &mut s;
    writeln!(w, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" font-family="sans-serif" font-size="12">"#).unwrap();
    writeln!(w, r#"<rect x="{MARGIN}" y="{MARGIN}" width="{}" height="{}" fill="none" stroke="black"/>"#, WIDTH - 2.0 * MARGIN, HEIGHT - 2.0 * MARGIN).unwrap();
    writeln!(w, r#"<text x="{}" y="30" text-anchor="middle">{}</text>"#, WIDTH / 2.0, escape(title)).unwrap();
    writeln!(w, r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#, WIDTH / 2.0, HEIGHT - 10.0, escape(x_label)).unwrap();
    writeln!(w, r#"<text x="{MARGIN}" y="{}" text-anchor="middle">{x_lo:.3}</text>"#, HEIGHT - MARGIN + 15.0).unwrap();
    writeln!(w, r#"<text x="{}" y="{}" text-anchor="middle">{x_hi:.3}</text>"#, WIDTH - MARGIN, HEIGHT - MARGIN + 15.0).unwrap();
    writeln!(w, r#"<text x="{}" y="{}" text-anchor="end">{y_lo:.3}</text>"#, MARGIN - 4.0, HEIGHT - MARGIN).unwrap();
    writeln!(w, r#"<text x="{}" y="{}" text-anchor="end">{y_hi:.3}</text>"#, MARGIN - 4.0, MARGIN + 4.0).unwrap();
    for (k, (name, values)) in series.iter().enumerate() {
        let color = COLORS[k % COLORS.len()];
        let points: Vec<String> = x
            .iter()
            .zip(values)
            .filter(|(a, b)| a.is_finite() && b.is_finite())
            .map(|(&a, &b)| format!("{:.2},{:.2}", px(a), py(b)))
            .collect();
        writeln!(w, r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"#, points.join(" ")).unwrap();
        let ly = MARGIN + 16.0 + 16.0 * k as f64;
        writeln!(w, r#"<text x="{}" y="{ly}" fill="{color}">{}</text>"#, WIDTH - MARGIN - 90.0, escape(name)).unwrap();
    }
    s.push_str("</svg>\n");
    s
}

fn range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), v| (l.min(v), h.max(v)));
    if !lo.is_finite() {
        return (0.0, 1.0);
    }
    if hi - lo < 1e-12 {
        return (lo - 0.5, hi + 0.5);
    }
    (lo, hi)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
