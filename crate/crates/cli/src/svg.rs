//! SVG pictures of rank-1 and rank-2 root systems and alcoves.
//!
//! Coweight coordinates are mapped to the plane through the symmetric
//! square root of the coweight Gram matrix, scaled so the shortest root is
//! 100 px long. Pictures therefore match the usual Euclidean figures up to
//! a rigid motion.

use std::fmt::Write as _;

use lieclass::alcove::alcove_vertices;
use lieclass::polar::{sym_exp, sym_log};
use lieclass::rootsys::RootSystem;
use lieclass::vogan::coweight_gram;
use lieclass::{MatF, Matrix, Rational};

use crate::CliError;

const SHORT_ROOT_PX: f64 = 100.0;

fn rational_f64(x: &Rational) -> f64 {
    let numer: f64 = x.numer().to_string().parse().expect("small numerator");
    let denom: f64 = x.denom().to_string().parse().expect("small denominator");
    numer / denom
}

/// Scaled symmetric square root of the coweight Gram matrix.
fn embedding(rs: &RootSystem) -> MatF {
    let gram = coweight_gram(rs);
    let g: MatF = gram.map(rational_f64);
    let half_log = sym_log(&g).expect("Gram is SPD").map(|v| v / 2.0);
    let sqrt = sym_exp(&half_log).expect("symmetric");
    sqrt.map(|v| v * SHORT_ROOT_PX / 2.0f64.sqrt())
}

fn invert(e: &MatF) -> MatF {
    match e.rows() {
        1 => Matrix::from_rows(vec![vec![1.0 / e[(0, 0)]]]).unwrap(),
        2 => {
            let det = e[(0, 0)] * e[(1, 1)] - e[(0, 1)] * e[(1, 0)];
            Matrix::from_rows(vec![
                vec![e[(1, 1)] / det, -e[(0, 1)] / det],
                vec![-e[(1, 0)] / det, e[(0, 0)] / det],
            ])
            .unwrap()
        }
        _ => unreachable!("svg rendering is rank <= 2"),
    }
}

/// Euclidean image of a coweight-coordinate point, with y up.
fn embed_point(e: &MatF, coeffs: &[f64]) -> (f64, f64) {
    let p = e.mul_vec(coeffs);
    if p.len() == 1 {
        (p[0], 0.0)
    } else {
        (p[0], p[1])
    }
}

/// Root vector in coweight coordinates: `alpha_j` maps to `d_j` times the
/// j-th Cartan row.
fn root_coweight_coords(rs: &RootSystem, m: &[i64]) -> Vec<f64> {
    let n = rs.rank();
    (0..n)
        .map(|k| {
            (0..n)
                .map(|j| (m[j] * rs.symmetrizer()[j] * rs.cartan_entry(j, k)) as f64)
                .sum()
        })
        .collect()
}

fn check_rank(rs: &RootSystem) -> Result<(), CliError> {
    if rs.rank() > 2 {
        return Err(CliError::Capability(format!(
            "svg rendering supports rank <= 2, got {}",
            rs.rs_type()
        )));
    }
    Ok(())
}

struct Canvas {
    body: String,
    radius: f64,
}

impl Canvas {
    fn new(radius: f64) -> Canvas {
        Canvas { body: String::new(), radius }
    }

    fn line(&mut self, a: (f64, f64), b: (f64, f64), style: &str) {
        let _ = writeln!(
            self.body,
            r##"  <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" {style}/>"##,
            a.0, -a.1, b.0, -b.1
        );
    }

    fn polygon(&mut self, pts: &[(f64, f64)], style: &str) {
        let coords: Vec<String> =
            pts.iter().map(|(x, y)| format!("{:.2},{:.2}", x, -y)).collect();
        let _ = writeln!(self.body, r##"  <polygon points="{}" {style}/>"##, coords.join(" "));
    }

    fn circle(&mut self, c: (f64, f64), r: f64, style: &str) {
        let _ = writeln!(
            self.body,
            r##"  <circle cx="{:.2}" cy="{:.2}" r="{r}" {style}/>"##,
            c.0, -c.1
        );
    }

    fn text(&mut self, at: (f64, f64), label: &str) {
        let _ = writeln!(
            self.body,
            r##"  <text x="{:.2}" y="{:.2}" font-size="14" font-family="monospace" fill="#333">{label}</text>"##,
            at.0, -at.1
        );
    }

    fn finish(self) -> String {
        let r = self.radius;
        let size = 2.0 * r;
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
             viewBox=\"{:.2} {:.2} {size:.2} {size:.2}\" width=\"{size:.0}\" height=\"{size:.0}\">\n\
             <rect x=\"{:.2}\" y=\"{:.2}\" width=\"{size:.2}\" height=\"{size:.2}\" fill=\"white\"/>\n\
             {}</svg>\n",
            -r, -r, -r, -r, self.body
        )
    }
}

/// Root-system picture: all roots as arrows from the origin.
pub fn render_roots(rs: &RootSystem) -> Result<String, CliError> {
    check_rank(rs)?;
    let e = embedding(rs);
    let mut endpoints: Vec<((f64, f64), bool)> = Vec::new();
    for root in rs.positive_roots() {
        let c = root_coweight_coords(rs, root.coords());
        let p = embed_point(&e, &c);
        let is_simple = root.height() == 1;
        endpoints.push((p, is_simple));
        endpoints.push(((-p.0, -p.1), false));
    }
    let radius = endpoints
        .iter()
        .map(|((x, y), _)| x.hypot(*y))
        .fold(0.0f64, f64::max)
        * 1.25
        + 20.0;
    let mut canvas = Canvas::new(radius);
    // axes
    canvas.line((-radius, 0.0), (radius, 0.0), r##"stroke="#dddddd" stroke-width="1""##);
    canvas.line((0.0, -radius), (0.0, radius), r##"stroke="#dddddd" stroke-width="1""##);
    for (p, is_simple) in &endpoints {
        let style = if *is_simple {
            r##"stroke="#c02020" stroke-width="2.5""##
        } else {
            r##"stroke="#2040c0" stroke-width="1.5""##
        };
        canvas.line((0.0, 0.0), *p, style);
        canvas.circle(*p, 3.0, r##"fill="#2040c0""##);
    }
    // highlight and label the highest root
    let theta = embed_point(&e, &root_coweight_coords(rs, rs.highest_root().coords()));
    canvas.circle(theta, 4.5, r##"fill="#20a020""##);
    canvas.text((theta.0 + 8.0, theta.1 + 8.0), "theta");
    canvas.text((-radius + 10.0, radius - 20.0), &rs.rs_type().to_string());
    Ok(canvas.finish())
}

/// Alcove picture: affine hyperplanes `alpha(x) = n` for `|n| <= 2` and the
/// shaded closed fundamental alcove.
pub fn render_alcove(rs: &RootSystem) -> Result<String, CliError> {
    check_rank(rs)?;
    let e = embedding(rs);
    let e_inv = invert(&e);
    let vertices: Vec<(f64, f64)> = alcove_vertices(rs)
        .iter()
        .map(|v| {
            let c: Vec<f64> = v.coeffs().iter().map(rational_f64).collect();
            embed_point(&e, &c)
        })
        .collect();
    let vertex_extent =
        vertices.iter().map(|(x, y)| x.hypot(*y)).fold(0.0f64, f64::max);
    let radius = (vertex_extent * 3.0).max(1.5 * SHORT_ROOT_PX) + 20.0;
    let mut canvas = Canvas::new(radius);

    // hyperplanes
    for root in rs.positive_roots() {
        let m: Vec<f64> = root.coords().iter().map(|&x| x as f64).collect();
        let nu = e_inv.mul_vec(&m);
        let (nx, ny) = if nu.len() == 1 { (nu[0], 0.0) } else { (nu[0], nu[1]) };
        let norm2 = nx * nx + ny * ny;
        for level in -2i64..=2 {
            let base = (nx * level as f64 / norm2, ny * level as f64 / norm2);
            if rs.rank() == 1 {
                // hyperplanes are points on the line: draw tick marks
                canvas.line(
                    (base.0, -12.0),
                    (base.0, 12.0),
                    r##"stroke="#888888" stroke-width="1.5""##,
                );
            } else {
                let dir = (-ny / norm2.sqrt(), nx / norm2.sqrt());
                let reach = 3.0 * radius;
                let a = (base.0 - reach * dir.0, base.1 - reach * dir.1);
                let b = (base.0 + reach * dir.0, base.1 + reach * dir.1);
                let style = if level == 0 {
                    r##"stroke="#999999" stroke-width="1.2""##
                } else {
                    r##"stroke="#cccccc" stroke-width="1""##
                };
                canvas.line(a, b, style);
            }
        }
    }

    // the closed alcove
    if rs.rank() == 1 {
        canvas.line(vertices[0], vertices[1], r##"stroke="#e07820" stroke-width="8" stroke-opacity="0.55""##);
    } else {
        canvas.polygon(&vertices, r##"fill="#e07820" fill-opacity="0.45" stroke="#c05500" stroke-width="1.5""##);
    }
    for (i, v) in vertices.iter().enumerate() {
        canvas.circle(*v, 3.5, r##"fill="#c05500""##);
        canvas.text((v.0 + 6.0, v.1 + 6.0), &format!("v{i}"));
    }
    canvas.text((-radius + 10.0, radius - 20.0), &rs.rs_type().to_string());
    Ok(canvas.finish())
}
