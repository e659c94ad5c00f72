//! One function per subcommand: run the packing, verify it and lay it out as
//! a table and a figure.

use std::f64::consts::PI;

use circlepack_core::lune::{LunePacking, MajorPhase, Resonance};
use circlepack_core::{
    hexpack, lens, lune, sector, square, Error, PackedCircle, PackingSequence, VerificationReport,
};
use serde_json::{json, Map, Value};

use crate::args::Command;
use crate::output::{Cell, Figure, Shape, Table};

pub enum JsonShape {
    /// Metadata plus the rows under `"circles"` (or `"rows"`).
    Listing(&'static str),
    /// The single row as a flat object.
    Flat,
}

pub struct Outcome {
    pub region: &'static str,
    pub parameters: Value,
    pub extra: Map<String, Value>,
    pub truncated: bool,
    pub table: Table,
    pub shape: JsonShape,
    pub figure: Figure,
    pub report: VerificationReport,
}

/// A core error together with the flag it concerns.
pub struct InputError {
    pub flag: &'static str,
    pub source: Error,
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "--{}: {}", self.flag, self.source)
    }
}

fn flag_of(err: &Error) -> &'static str {
    match err {
        Error::InvalidInput { param, .. } => param,
        Error::InvalidAngle(_) => "angle-deg",
        Error::InvalidRange { .. } => "n-min",
        _ => "input",
    }
}

fn wrap(source: Error) -> InputError {
    InputError {
        flag: flag_of(&source),
        source,
    }
}

fn circle_row(c: &PackedCircle) -> Vec<Cell> {
    vec![
        Cell::Int(c.index as u64),
        Cell::Num(c.radius),
        Cell::Num(c.center.x),
        Cell::Num(c.center.y),
    ]
}

fn packed(seq: &PackingSequence) -> Vec<(f64, f64, f64)> {
    seq.circles
        .iter()
        .map(|c| (c.center.x, c.center.y, c.radius))
        .collect()
}

fn n(v: f64) -> String {
    format!("{v:?}")
}

pub fn execute(cmd: &Command, tolerance: f64) -> Result<Outcome, InputError> {
    match *cmd {
        Command::SquareA { side, count } => {
            square_cmd(side, count, square::SquareMode::A, tolerance)
        }
        Command::SquareB { side, count } => {
            square_cmd(side, count, square::SquareMode::B, tolerance)
        }
        Command::Sector {
            radius,
            angle_deg,
            count,
        } => sector_cmd(radius, angle_deg, count, tolerance),
        Command::Lens { radius, count } => lens_cmd(radius, count, tolerance),
        Command::Lune {
            outer,
            a,
            b,
            minor,
            major,
        } => lune_cmd(outer, a, b, minor, major, tolerance),
        Command::Hex { n, r } => hex_cmd(n, r),
        Command::HexCurve { n_min, n_max } => hex_curve_cmd(n_min, n_max),
    }
    .map_err(wrap)
}

fn square_cmd(
    side: f64,
    count: usize,
    mode: square::SquareMode,
    tolerance: f64,
) -> Result<Outcome, Error> {
    let spec = square::SquareSpec { side, mode, count };
    let seq = square::pack(&spec)?;
    let report = square::verify(&spec, &seq, tolerance);
    let b_mode = mode == square::SquareMode::B;
    let mut table = Table {
        columns: vec!["index", "radius", "cx", "cy"],
        rows: Vec::with_capacity(seq.len()),
    };
    if b_mode {
        table.columns.push("closed_form");
    }
    for c in &seq.circles {
        let mut row = circle_row(c);
        if b_mode {
            row.push(Cell::Num(square::closed_form_mode_b(c.index as u64, side)?));
        }
        table.rows.push(row);
    }
    let x = side;
    let mut boundary = vec![
        Shape::Path(format!("M 0 0 L {0} 0 L {0} {0} L 0 {0} Z", n(x))),
        Shape::Path(format!("M 0 0 A {0} {0} 0 0 0 {1} 0", n(0.5 * x), n(x))),
        Shape::Path(format!("M 0 0 A {0} {0} 0 0 0 {0} {0}", n(x))),
    ];
    if b_mode {
        boundary.push(Shape::Path(format!(
            "M 0 0 A {0} {0} 0 0 1 0 {1}",
            n(0.5 * x),
            n(x)
        )));
    }
    Ok(Outcome {
        region: if b_mode { "square-b" } else { "square-a" },
        parameters: json!({ "side": side, "count": count }),
        extra: Map::new(),
        truncated: seq.truncated,
        table,
        shape: JsonShape::Listing("circles"),
        figure: Figure {
            bbox: (0.0, 0.0, x, x),
            boundary,
            packed: packed(&seq),
        },
        report,
    })
}

fn sector_cmd(radius: f64, angle_deg: f64, count: usize, tolerance: f64) -> Result<Outcome, Error> {
    let theta = angle_deg.to_radians();
    let spec = sector::SectorSpec {
        radius,
        central_angle: theta,
        count,
    };
    let seq = sector::pack(&spec)?;
    let report = sector::verify(&spec, &seq, tolerance);
    let table = Table {
        columns: vec!["index", "radius", "cx", "cy", "theta_deg"],
        rows: seq
            .circles
            .iter()
            .map(|c| {
                let mut row = circle_row(c);
                row.push(Cell::Num(c.angle.unwrap_or(f64::NAN).to_degrees()));
                row
            })
            .collect(),
    };
    let (ax, ay) = (radius * theta.cos(), radius * theta.sin());
    let top = if theta >= 0.5 * PI { radius } else { ay };
    Ok(Outcome {
        region: "sector",
        parameters: json!({ "radius": radius, "angle_deg": angle_deg, "count": count }),
        extra: Map::new(),
        truncated: seq.truncated,
        table,
        shape: JsonShape::Listing("circles"),
        figure: Figure {
            bbox: (ax.min(0.0), 0.0, radius, top),
            boundary: vec![Shape::Path(format!(
                "M 0 0 L {0} 0 A {0} {0} 0 0 1 {1} {2} Z",
                n(radius),
                n(ax),
                n(ay)
            ))],
            packed: packed(&seq),
        },
        report,
    })
}

fn lens_cmd(radius: f64, count: usize, tolerance: f64) -> Result<Outcome, Error> {
    let spec = lens::LensSpec { radius, count };
    let seq = lens::pack(&spec)?;
    let report = lens::verify(&spec, &seq, tolerance);
    let table = Table {
        columns: vec!["index", "radius", "cx", "cy"],
        rows: seq.circles.iter().map(circle_row).collect(),
    };
    let r = radius;
    Ok(Outcome {
        region: "lens",
        parameters: json!({ "radius": radius, "count": count }),
        extra: Map::new(),
        truncated: seq.truncated,
        table,
        shape: JsonShape::Listing("circles"),
        figure: Figure {
            bbox: (-2.0 * r, 0.0, 2.0 * r, 2.0 * r),
            boundary: vec![
                Shape::Circle { cx: -r, cy: r, r },
                Shape::Circle { cx: r, cy: r, r },
                Shape::Path(format!("M {} 0 L {} 0", n(-2.0 * r), n(2.0 * r))),
            ],
            packed: packed(&seq),
        },
        report,
    })
}

fn phase_name(p: MajorPhase) -> &'static str {
    match p {
        MajorPhase::Ascending => "ascending",
        MajorPhase::AtMax => "at_max",
        MajorPhase::Descending => "descending",
    }
}

fn lune_cmd(
    outer: f64,
    a: f64,
    b: f64,
    minor: usize,
    major: usize,
    tolerance: f64,
) -> Result<Outcome, Error> {
    let spec = lune::LuneSpec {
        outer,
        a,
        b,
        minor_count: minor,
        major_count: major,
    };
    let p: LunePacking = lune::pack_lune(&spec)?;
    let report = lune::verify(&spec, &p, tolerance);
    let mut table = Table {
        columns: vec!["region", "index", "radius", "cx", "cy"],
        rows: Vec::new(),
    };
    let labelled = std::iter::once(("initial", &p.initial))
        .chain(p.minor.circles.iter().map(|c| ("minor", c)))
        .chain(p.major.circles.iter().map(|c| ("major", c)));
    let mut circles = Vec::new();
    for (label, c) in labelled {
        let mut row = vec![Cell::Text(label.to_owned())];
        row.extend(circle_row(c));
        table.rows.push(row);
        circles.push((c.center.x, c.center.y, c.radius));
    }
    let mut extra = Map::new();
    extra.insert("r_max".into(), json!(p.r_max));
    extra.insert(
        "resonance".into(),
        json!(match p.resonance {
            Resonance::Resonant => "resonant",
            Resonance::NonResonant => "non_resonant",
        }),
    );
    extra.insert("degenerate".into(), json!(p.degenerate));
    extra.insert(
        "major_phases".into(),
        json!(p
            .major_phases
            .iter()
            .map(|&ph| phase_name(ph))
            .collect::<Vec<_>>()),
    );
    Ok(Outcome {
        region: "lune",
        parameters: json!({ "R": outer, "a": a, "b": b, "minor": minor, "major": major }),
        extra,
        truncated: false,
        table,
        shape: JsonShape::Listing("circles"),
        figure: Figure {
            bbox: (-outer, -outer, outer, outer),
            boundary: vec![
                Shape::Circle {
                    cx: 0.0,
                    cy: 0.0,
                    r: outer,
                },
                Shape::Circle {
                    cx: -(outer - b),
                    cy: 0.0,
                    r: b,
                },
            ],
            packed: circles,
        },
        report,
    })
}

fn hex_cmd(count_per_side: u64, r: f64) -> Result<Outcome, Error> {
    let m = hexpack::metrics(&hexpack::HexPackSpec {
        n: count_per_side,
        r,
    })?;
    let mut report = VerificationReport::new(0.0);
    let identity = if m.voids == 2 * m.count + 4 {
        0.0
    } else {
        f64::INFINITY
    };
    report.record(0, "voids = 2N + 4", identity);
    let in_range = if m.density > 0.0 && m.density < hexpack::density_limit() {
        0.0
    } else {
        f64::INFINITY
    };
    report.record(0, "density below limit", in_range);
    let table = Table {
        columns: vec!["n", "r", "N", "Nv", "side", "R", "L", "density"],
        rows: vec![vec![
            Cell::Int(count_per_side),
            Cell::Num(r),
            Cell::Int(m.count),
            Cell::Int(m.voids),
            Cell::Num(m.side),
            Cell::Num(m.circumradius),
            Cell::Num(m.string_length),
            Cell::Num(m.density),
        ]],
    };
    let a = m.side;
    let hexagon: Vec<(f64, f64)> = (0..=6)
        .map(|k| {
            let t = f64::from(k) * PI / 3.0;
            (a * t.cos(), a * t.sin())
        })
        .collect();
    let reach = a.max(m.circumradius);
    Ok(Outcome {
        region: "hex",
        parameters: json!({ "n": count_per_side, "r": r }),
        extra: Map::new(),
        truncated: false,
        table,
        shape: JsonShape::Flat,
        figure: Figure {
            bbox: (-reach, -reach, reach, reach),
            boundary: vec![
                Shape::Polyline(hexagon),
                Shape::Circle {
                    cx: 0.0,
                    cy: 0.0,
                    r: m.circumradius,
                },
            ],
            packed: Vec::new(),
        },
        report,
    })
}

fn hex_curve_cmd(n_min: u64, n_max: u64) -> Result<Outcome, Error> {
    let curve = hexpack::density_curve(n_min, n_max)?;
    let mut report = VerificationReport::new(0.0);
    for w in curve.windows(2) {
        let step = if w[1].1 > w[0].1 { 0.0 } else { f64::INFINITY };
        report.record(w[1].0 as usize, "density increases", step);
    }
    let limit = hexpack::density_limit();
    let below = if curve.iter().all(|&(_, d)| d < limit) {
        0.0
    } else {
        f64::INFINITY
    };
    report.record(0, "density below limit", below);
    // unit box: n across, density between rho(2) and the limit upwards
    let low = hexpack::density(2)?;
    let span = (n_max - n_min).max(1) as f64;
    let points = curve
        .iter()
        .map(|&(k, d)| ((k - n_min) as f64 / span, (d - low) / (limit - low)))
        .collect();
    Ok(Outcome {
        region: "hex-curve",
        parameters: json!({ "n_min": n_min, "n_max": n_max }),
        extra: Map::new(),
        truncated: false,
        table: Table {
            columns: vec!["n", "density"],
            rows: curve
                .iter()
                .map(|&(k, d)| vec![Cell::Int(k), Cell::Num(d)])
                .collect(),
        },
        shape: JsonShape::Listing("rows"),
        figure: Figure {
            bbox: (0.0, 0.0, 1.0, 1.0),
            boundary: vec![Shape::Path("M 0 1 L 1 1".into()), Shape::Polyline(points)],
            packed: Vec::new(),
        },
        report,
    })
}
