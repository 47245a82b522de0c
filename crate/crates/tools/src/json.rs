//! JSON shapes for command output.

use serde_json::{json, Value};

use sweep_core::equitable::{balancing_array, column_statuses, Fill};
use sweep_core::lattice::EqLattice;
use sweep_core::oracle::VerifyReport;
use sweep_core::schedule::Schedule;
use sweep_core::sweep::PresweepFailure;
use sweep_core::PartitionedWord;

pub fn partition(p: &PartitionedWord) -> Value {
    json!({
        "word": p.word().to_string(),
        "partition": p.to_string(),
        "blocks": p.block_vector(),
    })
}

pub fn failure(p: &PartitionedWord, f: &PresweepFailure) -> Value {
    let visited: Vec<usize> = f.visited().iter().map(|&(i, _)| i + 1).collect();
    json!({
        "partition": p.to_string(),
        "successful": false,
        "visited": visited,
        "residue": f.residue().to_string(),
        "suffix_lengths": f.suffix_lengths(),
    })
}

pub fn lattice(lat: &EqLattice) -> Value {
    let nodes: Vec<Value> = lat
        .nodes()
        .iter()
        .enumerate()
        .map(|(i, p)| json!({"index": i, "partition": p.to_string(), "blocks": p.block_vector()}))
        .collect();
    json!({
        "word": lat.word().to_string(),
        "modulus": lat.word().modulus(),
        "nodes": nodes,
        "covers": lat.covers(),
        "bottom": lat.bottom(),
        "top": lat.top(),
    })
}

pub fn array(p: &PartitionedWord) -> Value {
    let arr = balancing_array(p);
    let rows: Vec<Vec<bool>> = (0..arr.rows())
        .map(|i| (0..arr.cols()).rev().map(|j| arr.filled(i, j)).collect())
        .collect();
    let columns: Vec<Value> = column_statuses(p)
        .iter()
        .map(|c| {
            let fill = match c.fill {
                Fill::Less => "less",
                Fill::Equitable => "equitable",
                Fill::More => "more",
            };
            json!({"column": c.column, "count": c.count, "target": c.target, "fill": fill})
        })
        .collect();
    json!({"partition": p.to_string(), "rows": rows, "columns": columns})
}

pub fn schedule(s: &Schedule, successful: bool) -> Value {
    json!({
        "hours": s.hours(),
        "lengths": s.lengths(),
        "starts": s.starts(),
        "successful": successful,
    })
}

pub fn report(r: &VerifyReport) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "passed": c.passed(),
                "tested": c.tested,
                "failures": c.failures,
                "counterexample": c.counterexample,
            })
        })
        .collect();
    json!({
        "instance": r.instance,
        "passed": r.passed(),
        "words": r.words,
        "partitions": r.partitions,
        "checks": checks,
    })
}
