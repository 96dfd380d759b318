//! The six configurations of interesting line families in ℝP³.

use tropeci::arith::rat;
use tropeci::cohomology::{classify_line_pair, ProjLine};

fn line(a: [i64; 3], b: [i64; 3]) -> ProjLine {
    ProjLine::new(a.iter().map(|x| rat(*x, 1)).collect(), b.iter().map(|x| rat(*x, 1)).collect()).unwrap()
}

fn main() {
    let o = [0, 0, 0];
    let cases = vec![
        ("two pencils through one point", vec![line(o, [1, 0, 0]), line(o, [0, 1, 0])], vec![line(o, [0, 0, 1]), line(o, [1, 1, 1])]),
        ("everything in one plane", vec![line(o, [1, 0, 0]), line([0, 1, 0], [1, 1, 0])], vec![line(o, [0, 1, 0]), line([2, 0, 0], [3, 1, 0])]),
        ("pencil against plane and point", vec![line(o, [1, 0, 0]), line(o, [0, 1, 0])], vec![line([1, 0, 0], [0, 1, 0]), line(o, [0, 0, 1])]),
        (
            "mixed",
            vec![line(o, [1, 1, 0]), line([1, 0, 0], [1, 0, 1]), line(o, [1, 0, 0])],
            vec![line([1, 0, 0], [0, 1, 0]), line(o, [1, 0, 1])],
        ),
        ("one line against its transversals", vec![line(o, [1, 0, 0])], vec![line(o, [0, 1, 1]), line([1, 0, 0], [1, 1, 3]), line([2, 0, 0], [3, 5, 7])]),
        (
            "two meeting lines against their transversals",
            vec![line(o, [1, 0, 0]), line([0, 0, 1], [0, 1, 1])],
            vec![line(o, [0, 0, 1]), line([1, 0, 0], [0, 1, 1]), line([2, 0, 0], [0, 3, 1])],
        ),
        ("skew lines", vec![line(o, [1, 0, 0])], vec![line([0, 0, 1], [0, 1, 1])]),
    ];
    for (name, l, r) in cases {
        match classify_line_pair(&l, &r) {
            Ok(c) => println!("{:<46} type {} (swapped {})", name, c.tag, c.swapped),
            Err(e) => println!("{:<46} {}", name, e),
        }
    }
}
