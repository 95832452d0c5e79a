//! Fixed-width street diagrams.
//!
//! One row of boxes: the trailer, each parked car as a labelled span and any
//! empty spot as a bare cell. Spot numbers run underneath. A failed run adds a
//! `^` under the spot where the failing car was stopped.

use parkseq::{FailureReason, ParkOutcome, ParkingInstance};

fn digits(v: u64) -> usize {
    v.to_string().len()
}

/// Width of one spot cell, excluding its separator.
pub fn cell_width(instance: &ParkingInstance) -> usize {
    let m = instance.street_length() as u64;
    let n = instance.cars() as u64;
    2.max(digits(m)).max(1 + digits(n))
}

struct Span {
    first: u32,
    last: u32,
    label: String,
}

fn spans(instance: &ParkingInstance, outcome: &ParkOutcome) -> Vec<Span> {
    let m = instance.street_length();
    let mut owner: Vec<Option<String>> = vec![None; m as usize + 1];
    for (i, p) in outcome.placements().iter().enumerate() {
        for s in p.start..=p.end {
            owner[s as usize] = Some(format!("C{}", i + 1));
        }
    }
    let mut out = Vec::new();
    if instance.trailer() > 1 {
        out.push(Span {
            first: 1,
            last: instance.trailer() - 1,
            label: "T".into(),
        });
    }
    let mut s = instance.trailer();
    while s <= m {
        match &owner[s as usize] {
            Some(label) => {
                let mut last = s;
                while last < m && owner[last as usize + 1].as_ref() == Some(label) {
                    last += 1;
                }
                out.push(Span {
                    first: s,
                    last,
                    label: label.clone(),
                });
                s = last + 1;
            }
            None => {
                out.push(Span {
                    first: s,
                    last: s,
                    label: String::new(),
                });
                s += 1;
            }
        }
    }
    out
}

/// Column of the last character of spot `s`, where its number ends.
fn column(w: usize, s: u32) -> usize {
    (s as usize - 1) * (w + 1) + w
}

pub fn render(instance: &ParkingInstance, outcome: &ParkOutcome) -> String {
    let w = cell_width(instance);
    let m = instance.street_length();
    let spans = spans(instance, outcome);

    let mut border = String::from("+");
    let mut labels = String::from("|");
    for span in &spans {
        let cells = (span.last - span.first + 1) as usize;
        let inner = cells * w + cells - 1;
        border.push_str(&"-".repeat(inner));
        border.push('+');
        labels.push_str(&format!("{:^inner$}", span.label));
        labels.push('|');
    }
    let mut numbers = String::from(" ");
    for s in 1..=m {
        numbers.push_str(&format!("{s:>w$} "));
    }

    let mut lines = vec![
        border.clone(),
        labels,
        border,
        numbers.trim_end().to_string(),
    ];
    if let ParkOutcome::Failure {
        failed_car, reason, ..
    } = outcome
    {
        let (spot, message) = match *reason {
            FailureReason::Collision { start, blocked_at } if blocked_at > m => (
                blocked_at,
                format!("C{failed_car} starting at {start} runs past the end of the street"),
            ),
            FailureReason::Collision { start, blocked_at } => (
                blocked_at,
                format!("C{failed_car} starting at {start} collides at spot {blocked_at}"),
            ),
            FailureReason::OffStreet { preference } => (
                preference.min(m + 1),
                format!("C{failed_car} finds no empty spot at or after {preference}"),
            ),
        };
        let col = column(w, spot);
        lines.push(format!("{}^", " ".repeat(col)));
        lines.push(message);
    }
    let mut text = lines.join("\n");
    text.push('\n');
    text
}
