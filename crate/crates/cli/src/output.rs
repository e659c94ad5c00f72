//! Tables and figures, and their CSV, JSON and SVG renderings.

use std::fmt::Write as _;

use serde_json::{Map, Number, Value};

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(u64),
    Num(f64),
    Text(String),
}

#[derive(Clone, Debug, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

#[derive(Clone, Debug)]
pub enum Shape {
    Circle {
        cx: f64,
        cy: f64,
        r: f64,
    },
    /// Raw path data in region coordinates.
    Path(String),
    Polyline(Vec<(f64, f64)>),
}

#[derive(Clone, Debug)]
pub struct Figure {
    /// `(min_x, min_y, max_x, max_y)`
    pub bbox: (f64, f64, f64, f64),
    pub boundary: Vec<Shape>,
    pub packed: Vec<(f64, f64, f64)>,
}

/// Rounds to `digits` significant digits.
pub fn round_sig(v: f64, digits: u8) -> f64 {
    if !v.is_finite() || v == 0.0 {
        return v;
    }
    format!("{:.*e}", usize::from(digits) - 1, v)
        .parse()
        .unwrap_or(v)
}

/// Shortest text that parses back to the rounded value.
pub fn fmt_num(v: f64, digits: u8) -> String {
    format!("{:?}", round_sig(v, digits))
}

pub fn json_num(v: f64, digits: u8) -> Value {
    Number::from_f64(round_sig(v, digits)).map_or(Value::Null, Value::Number)
}

fn cell_text(c: &Cell, digits: u8) -> String {
    match c {
        Cell::Int(i) => i.to_string(),
        Cell::Num(v) => fmt_num(*v, digits),
        Cell::Text(t) => t.clone(),
    }
}

fn cell_json(c: &Cell, digits: u8) -> Value {
    match c {
        Cell::Int(i) => Value::from(*i),
        Cell::Num(v) => json_num(*v, digits),
        Cell::Text(t) => Value::from(t.as_str()),
    }
}

pub fn write_csv(table: &Table, digits: u8) -> Result<Vec<u8>, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&table.columns)?;
    for row in &table.rows {
        w.write_record(row.iter().map(|c| cell_text(c, digits)))?;
    }
    w.into_inner().map_err(|e| e.into_error().into())
}

/// One JSON object per row, keyed by column name.
pub fn rows_json(table: &Table, digits: u8) -> Value {
    Value::Array(
        table
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = table
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(k, c)| ((*k).to_owned(), cell_json(c, digits)))
                    .collect();
                Value::Object(obj)
            })
            .collect(),
    )
}

pub fn write_svg(fig: &Figure, digits: u8) -> String {
    let f = |v: f64| fmt_num(v, digits);
    let (x0, y0, x1, y1) = fig.bbox;
    let major = (x1 - x0).max(y1 - y0);
    let margin = 0.02 * major;
    let stroke = 0.002 * major;
    let (w, h) = (x1 - x0 + 2.0 * margin, y1 - y0 + 2.0 * margin);
    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">",
        f(x0 - margin),
        f(-(y1 + margin)),
        f(w),
        f(h)
    );
    let _ = writeln!(
        s,
        "<g transform=\"scale(1,-1)\" stroke-width=\"{}\">",
        f(stroke)
    );
    for shape in &fig.boundary {
        let style = "class=\"boundary\" fill=\"none\" stroke=\"black\"";
        match shape {
            Shape::Circle { cx, cy, r } => {
                let _ = writeln!(
                    s,
                    "<circle {style} cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
                    f(*cx),
                    f(*cy),
                    f(*r)
                );
            }
            Shape::Path(d) => {
                let _ = writeln!(s, "<path {style} d=\"{d}\"/>");
            }
            Shape::Polyline(points) => {
                let pts: Vec<String> = points
                    .iter()
                    .map(|(x, y)| format!("{},{}", f(*x), f(*y)))
                    .collect();
                let _ = writeln!(s, "<polyline {style} points=\"{}\"/>", pts.join(" "));
            }
        }
    }
    for (cx, cy, r) in &fig.packed {
        let _ = writeln!(
            s,
            "<circle class=\"packed\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"steelblue\" fill-opacity=\"0.3\" stroke=\"steelblue\"/>",
            f(*cx),
            f(*cy),
            f(*r)
        );
    }
    s.push_str("</g>\n</svg>\n");
    s
}
