use petgraph::unionfind::UnionFind;

use super::state::{KauffmanState, Marker};
use super::PretzelSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

/// The four endpoints of a crossing drawn in a vertical twist column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Port {
    NorthWest = 0,
    NorthEast = 1,
    SouthWest = 2,
    SouthEast = 3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub column: usize,
    /// Position inside the column, 0 at the top.
    pub row: usize,
    pub sign: Sign,
}

/// Global port index: crossing `i` owns ports `4i..4i+4`.
pub fn port_id(crossing: usize, port: Port) -> usize {
    4 * crossing + port as usize
}

/// A pretzel diagram as an explicit crossing list plus the arcs joining
/// crossing endpoints.
///
/// Inside a column, the south ports of one crossing meet the north ports of
/// the next. The north-east port of each column's top crossing meets the
/// north-west port of the next column's top crossing, cyclically, and the
/// bottom crossings are joined the same way along the south side. Split
/// unknotted circles can be added with [`Diagram::with_disjoint_circle`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    arcs: Vec<(usize, usize)>,
    free_loops: usize,
}

impl Diagram {
    pub fn from_spec(spec: &PretzelSpec) -> Self {
        let mut crossings = Vec::with_capacity(spec.crossing_count());
        let mut columns = Vec::with_capacity(spec.num_columns());
        for (column, &p) in spec.tangles().iter().enumerate() {
            let sign = if p > 0 {
                Sign::Positive
            } else {
                Sign::Negative
            };
            let start = crossings.len();
            for row in 0..p.unsigned_abs() as usize {
                crossings.push(Crossing { column, row, sign });
            }
            columns.push((start, crossings.len() - 1));
        }

        let mut arcs = Vec::with_capacity(2 * crossings.len());
        for &(top, bottom) in &columns {
            for c in top..bottom {
                arcs.push((port_id(c, Port::SouthWest), port_id(c + 1, Port::NorthWest)));
                arcs.push((port_id(c, Port::SouthEast), port_id(c + 1, Port::NorthEast)));
            }
        }
        let k = columns.len();
        for i in 0..k {
            let (top, bottom) = columns[i];
            let (next_top, next_bottom) = columns[(i + 1) % k];
            arcs.push((
                port_id(top, Port::NorthEast),
                port_id(next_top, Port::NorthWest),
            ));
            arcs.push((
                port_id(bottom, Port::SouthEast),
                port_id(next_bottom, Port::SouthWest),
            ));
        }

        Self {
            crossings,
            arcs,
            free_loops: 0,
        }
    }

    /// The crossingless one-circle diagram.
    pub fn unknot() -> Self {
        Self {
            crossings: Vec::new(),
            arcs: Vec::new(),
            free_loops: 1,
        }
    }

    /// Adds a split unknotted circle.
    pub fn with_disjoint_circle(mut self) -> Self {
        self.free_loops += 1;
        self
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// The two arcs that replace crossing `i` under `marker`.
    ///
    /// For a positive crossing the A-smoothing joins the ports vertically
    /// (NW-SW, NE-SE) and the B-smoothing horizontally (NW-NE, SW-SE);
    /// negative crossings swap the two.
    pub fn smoothing(&self, i: usize, marker: Marker) -> [(usize, usize); 2] {
        let vertical = matches!(
            (self.crossings[i].sign, marker),
            (Sign::Positive, Marker::A) | (Sign::Negative, Marker::B)
        );
        let p = |port| port_id(i, port);
        if vertical {
            [
                (p(Port::NorthWest), p(Port::SouthWest)),
                (p(Port::NorthEast), p(Port::SouthEast)),
            ]
        } else {
            [
                (p(Port::NorthWest), p(Port::NorthEast)),
                (p(Port::SouthWest), p(Port::SouthEast)),
            ]
        }
    }

    /// Number of circles `|D_s|` left after smoothing every crossing.
    ///
    /// Panics if `state` does not cover exactly this diagram's crossings.
    pub fn count_circles(&self, state: &KauffmanState) -> usize {
        self.circle_counter().count(state)
    }

    /// Precomputes the wiring so that many states can be counted cheaply.
    pub fn circle_counter(&self) -> CircleCounter<'_> {
        let mut wired = UnionFind::new(4 * self.crossings.len());
        let mut merges = 0;
        for &(a, b) in &self.arcs {
            if wired.union(a as u32, b as u32) {
                merges += 1;
            }
        }
        CircleCounter {
            diagram: self,
            wired,
            wiring_merges: merges,
        }
    }
}

/// Circle counting against a fixed diagram. The smoothed diagram is a
/// 2-regular graph on the ports, so its cycles are its union-find
/// components.
pub struct CircleCounter<'a> {
    diagram: &'a Diagram,
    wired: UnionFind<u32>,
    wiring_merges: usize,
}

impl CircleCounter<'_> {
    pub fn count(&self, state: &KauffmanState) -> usize {
        let d = self.diagram;
        assert_eq!(
            state.len(),
            d.crossing_count(),
            "state covers {} crossings, diagram has {}",
            state.len(),
            d.crossing_count()
        );
        let mut uf = self.wired.clone();
        let mut merges = self.wiring_merges;
        for i in 0..d.crossing_count() {
            for (a, b) in d.smoothing(i, state.marker(i)) {
                if uf.union(a as u32, b as u32) {
                    merges += 1;
                }
            }
        }
        4 * d.crossing_count() - merges + d.free_loops
    }
}

pub fn build_diagram(spec: &PretzelSpec) -> Diagram {
    Diagram::from_spec(spec)
}

pub fn count_circles(diagram: &Diagram, state: &KauffmanState) -> usize {
    diagram.count_circles(state)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(t: &[i64]) -> PretzelSpec {
        PretzelSpec::new(t.to_vec()).unwrap()
    }

    fn circles(t: &[i64], state: &str) -> usize {
        build_diagram(&spec(t)).count_circles(&state.parse().unwrap())
    }

    #[test]
    fn crossing_layout() {
        let d = build_diagram(&spec(&[1, 1, 1]));
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(
            d.crossings().iter().map(|c| c.column).collect::<Vec<_>>(),
            vec![0, 1, 2]
        );

        let d = build_diagram(&spec(&[1, 1, 5]));
        assert_eq!(d.crossing_count(), 7);
        let sizes: Vec<usize> = (0..3)
            .map(|col| d.crossings().iter().filter(|c| c.column == col).count())
            .collect();
        assert_eq!(sizes, vec![1, 1, 5]);

        let d = build_diagram(&spec(&[-2, 3]));
        assert_eq!(d.crossing_count(), 5);
        assert!(d.crossings()[..2].iter().all(|c| c.sign == Sign::Negative));
        assert!(d.crossings()[2..].iter().all(|c| c.sign == Sign::Positive));
    }

    #[test]
    fn every_port_is_wired_once() {
        for t in [&[1][..], &[1, 1], &[2, -3, 4], &[1, 1, 1, 1, 6]] {
            let d = build_diagram(&spec(t));
            let mut seen = vec![0u8; 4 * d.crossing_count()];
            for &(a, b) in d.arcs() {
                seen[a] += 1;
                seen[b] += 1;
            }
            assert!(seen.iter().all(|&n| n == 1), "{t:?}");
        }
    }

    #[test]
    fn trefoil_states() {
        assert_eq!(circles(&[1, 1, 1], "AAA"), 3);
        for s in ["AAB", "ABA", "BAA"] {
            assert_eq!(circles(&[1, 1, 1], s), 2, "{s}");
        }
        for s in ["BAB", "ABB", "BBA"] {
            assert_eq!(circles(&[1, 1, 1], s), 1, "{s}");
        }
        assert_eq!(circles(&[1, 1, 1], "BBB"), 2);
    }

    #[test]
    fn twist_column_inner_circles() {
        // q horizontal smoothings in one column leave q - 1 inner circles.
        assert_eq!(circles(&[1, 1, 4], "AABBBB"), 5);
        assert_eq!(circles(&[1, 1, 4], "AAAAAA"), 3);
    }

    #[test]
    fn single_column_diagram() {
        // One column of n crossings closed on itself.
        assert_eq!(circles(&[3], "AAA"), 1);
        assert_eq!(circles(&[3], "BBB"), 4);
    }

    #[test]
    fn free_loops_add_circles() {
        assert_eq!(Diagram::unknot().count_circles(&KauffmanState::all_a(0)), 1);
        let d = build_diagram(&spec(&[1, 1, 1])).with_disjoint_circle();
        assert_eq!(d.count_circles(&"AAA".parse().unwrap()), 4);
    }

    #[test]
    #[should_panic(expected = "state covers")]
    fn mismatched_state_panics() {
        circles(&[1, 1, 1], "AA");
    }
}
