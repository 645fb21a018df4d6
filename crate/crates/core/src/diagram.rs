//! Billiard table diagrams.
//!
//! The table is the rectangle `[0,b] x [0,a]`, possibly with unit squares cut
//! from the last column. Every unit cell carries the one diagonal whose
//! endpoints have even coordinate sum; these diagonals are the trajectory.
//! A lattice point touched by four region cells is a crossing, by two cells a
//! bounce, and by one cell a pocket where the strand leaves the table.
//!
//! Crossing slots are the interior lattice points `x + y` even of the full
//! rectangle, ordered bottom to top within a column and columns left to
//! right. A slot whose point is not a crossing of the region is skipped.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::sign::{Sign, SignSequence};

pub type Point = (i32, i32);
/// A unit diagonal step `(±1, ±1)`.
pub type Dir = (i32, i32);

/// Port directions at a crossing, counterclockwise from north-east.
pub const PORTS: [Dir; 4] = [(1, 1), (-1, 1), (-1, -1), (1, -1)];

pub fn port_of(d: Dir) -> usize {
    match d {
        (1, 1) => 0,
        (-1, 1) => 1,
        (-1, -1) => 2,
        (1, -1) => 3,
        _ => unreachable!("not a diagonal direction"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Top,
    Bottom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bumpers {
    None,
    /// `count` unit squares cut from the `side` end of the last column.
    Removed { count: u32, side: Side },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TableSpec {
    pub a: u32,
    pub b: u32,
    pub bumpers: Bumpers,
}

impl TableSpec {
    /// The full rectangular table `T(a,b)`.
    pub fn rect(a: u32, b: u32) -> Self {
        Self {
            a,
            b,
            bumpers: Bumpers::None,
        }
    }

    /// `B2(5,b)`: two squares removed, from the top for odd `b` and the
    /// bottom for even `b`.
    pub fn two_bumpers(b: u32) -> Self {
        let side = if b % 2 == 1 { Side::Top } else { Side::Bottom };
        Self {
            a: 5,
            b,
            bumpers: Bumpers::Removed { count: 2, side },
        }
    }

    /// `B1(5,b)`: one square removed, from the top for even `b` and the
    /// bottom for odd `b`.
    pub fn one_bumper(b: u32) -> Self {
        let side = if b.is_multiple_of(2) { Side::Top } else { Side::Bottom };
        Self {
            a: 5,
            b,
            bumpers: Bumpers::Removed { count: 1, side },
        }
    }

    fn removed(&self, cell: Point) -> bool {
        match self.bumpers {
            Bumpers::None => false,
            Bumpers::Removed { count, side } => {
                let (a, b, count) = (self.a as i32, self.b as i32, count as i32);
                cell.0 == b - 1
                    && match side {
                        Side::Top => cell.1 >= a - count,
                        Side::Bottom => cell.1 < count,
                    }
            }
        }
    }

    fn has_cell(&self, cell: Point) -> bool {
        (0..self.b as i32).contains(&cell.0)
            && (0..self.a as i32).contains(&cell.1)
            && !self.removed(cell)
    }

    /// Counterclockwise boundary polygon of the region.
    fn outline(&self) -> Vec<Point> {
        let (a, b) = (self.a as i32, self.b as i32);
        match self.bumpers {
            Bumpers::None => vec![(0, 0), (b, 0), (b, a), (0, a)],
            Bumpers::Removed { count, side } => {
                let n = count as i32;
                match side {
                    Side::Bottom => vec![(0, 0), (b - 1, 0), (b - 1, n), (b, n), (b, a), (0, a)],
                    Side::Top => vec![(0, 0), (b, 0), (b, a - n), (b - 1, a - n), (b - 1, a), (0, a)],
                }
            }
        }
    }

    /// Distance from the origin along the counterclockwise boundary.
    fn perimeter_position(&self, p: Point) -> i32 {
        let poly = self.outline();
        let mut walked = 0;
        for i in 0..poly.len() {
            let (s, t) = (poly[i], poly[(i + 1) % poly.len()]);
            let on_x = s.0 == t.0 && p.0 == s.0 && between(p.1, s.1, t.1);
            let on_y = s.1 == t.1 && p.1 == s.1 && between(p.0, s.0, t.0);
            if on_x || on_y {
                return walked + (p.0 - s.0).abs() + (p.1 - s.1).abs();
            }
            walked += (t.0 - s.0).abs() + (t.1 - s.1).abs();
        }
        unreachable!("pocket off the boundary")
    }
}

fn between(v: i32, s: i32, t: i32) -> bool {
    s.min(t) <= v && v <= s.max(t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum PointKind {
    Pocket,
    Bounce,
    Crossing(usize),
}

/// A crossing and the four arcs meeting it, listed counterclockwise from the
/// north-east port.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub position: Point,
    pub slot: usize,
    pub ports: [usize; 4],
    /// Traversal direction of the slope `+1` strand.
    pub rising: Dir,
    /// Traversal direction of the slope `-1` strand.
    pub falling: Dir,
}

impl Crossing {
    /// Writhe contribution when the crossing carries sign `+`, which puts the
    /// rising strand on top.
    pub fn epsilon(&self) -> i32 {
        cross(self.rising, self.falling).signum()
    }

    fn over_under(&self, sign: Sign) -> (Dir, Dir) {
        match sign {
            Sign::Plus => (self.rising, self.falling),
            Sign::Minus => (self.falling, self.rising),
        }
    }
}

fn cross(u: Dir, v: Dir) -> i32 {
    u.0 * v.1 - u.1 * v.0
}

/// A crossing-to-crossing edge. `tail` and `head` are `(crossing, port)` in
/// traversal order; both are `None` for a component without crossings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub component: usize,
    pub tail: Option<(usize, usize)>,
    pub head: Option<(usize, usize)>,
}

/// Passing through crossing `crossing` in direction `direction`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Visit {
    pub crossing: usize,
    pub direction: Dir,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub start: Point,
    pub start_direction: Dir,
    /// True when the component runs through pockets and closure arcs.
    pub long: bool,
    pub visits: Vec<Visit>,
    /// Arc ids in traversal order, starting with the arc leaving the first visit.
    pub arcs: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilliardDiagram {
    spec: TableSpec,
    crossings: Vec<Crossing>,
    slots: Vec<Option<usize>>,
    arcs: Vec<Arc>,
    components: Vec<Component>,
    closures: Vec<(Point, Point)>,
}

struct Tracer {
    spec: TableSpec,
    kinds: BTreeMap<Point, PointKind>,
    neighbours: BTreeMap<Point, Vec<Point>>,
    partner: BTreeMap<Point, Point>,
}

impl Tracer {
    /// The next step after arriving at `q` with direction `d`, or `None` at a
    /// pocket when closures are not followed.
    fn advance(&self, q: Point, d: Dir, close: bool) -> Option<(Point, Dir)> {
        match self.kinds[&q] {
            PointKind::Crossing(_) => Some((q, d)),
            PointKind::Bounce => {
                let back = (q.0 - d.0, q.1 - d.1);
                let n = self.neighbours[&q].iter().find(|&&n| n != back).copied()?;
                Some((q, (n.0 - q.0, n.1 - q.1)))
            }
            PointKind::Pocket if close => {
                let r = self.partner[&q];
                Some((r, self.exit(r)))
            }
            PointKind::Pocket => None,
        }
    }

    fn exit(&self, pocket: Point) -> Dir {
        let n = self.neighbours[&pocket][0];
        (n.0 - pocket.0, n.1 - pocket.1)
    }

    fn trace_open(&self, pocket: Point) -> Point {
        let (mut p, mut d) = (pocket, self.exit(pocket));
        loop {
            let q = (p.0 + d.0, p.1 + d.1);
            match self.advance(q, d, false) {
                Some(next) => (p, d) = next,
                None => return q,
            }
        }
    }
}

fn cell_of(p: Point, d: Dir) -> Point {
    (p.0 + d.0.min(0), p.1 + d.1.min(0))
}

impl BilliardDiagram {
    pub fn build(spec: TableSpec) -> Result<Self> {
        if !(3..=5).contains(&spec.a) {
            return Err(Error::UnsupportedHeight(spec.a));
        }
        if spec.b == 0 {
            return Err(Error::ZeroWidth);
        }
        if let Bumpers::Removed { count, .. } = spec.bumpers {
            if spec.a != 5 || !(1..=2).contains(&count) {
                return Err(Error::UnsupportedBumpers);
            }
        }
        let (a, b) = (spec.a as i32, spec.b as i32);

        let mut kinds = BTreeMap::new();
        let mut neighbours = BTreeMap::new();
        let mut crossing_points = Vec::new();
        for x in 0..=b {
            for y in 0..=a {
                if (x + y) % 2 != 0 {
                    continue;
                }
                let nbrs: Vec<Point> = PORTS
                    .iter()
                    .filter(|d| spec.has_cell(cell_of((x, y), **d)))
                    .map(|d| (x + d.0, y + d.1))
                    .collect();
                let kind = match nbrs.len() {
                    0 => continue,
                    1 => PointKind::Pocket,
                    2 => PointKind::Bounce,
                    3 => {
                        return Err(Error::InteriorCornerCrossing {
                            x: x as u32,
                            y: y as u32,
                        })
                    }
                    _ => {
                        crossing_points.push((x, y));
                        PointKind::Crossing(0)
                    }
                };
                kinds.insert((x, y), kind);
                neighbours.insert((x, y), nbrs);
            }
        }

        let mut slots = Vec::new();
        let mut positions = Vec::new();
        for x in 1..b {
            for y in 1..a {
                if (x + y) % 2 != 0 {
                    continue;
                }
                if let Some(PointKind::Crossing(_)) = kinds.get(&(x, y)) {
                    kinds.insert((x, y), PointKind::Crossing(positions.len()));
                    slots.push(Some(positions.len()));
                    positions.push(((x, y), slots.len() - 1));
                } else {
                    slots.push(None);
                }
            }
        }
        while slots.last() == Some(&None) {
            slots.pop();
        }
        debug_assert_eq!(positions.len(), crossing_points.len());

        let mut tracer = Tracer {
            spec,
            kinds,
            neighbours,
            partner: BTreeMap::new(),
        };
        let closures = Self::close(&tracer)?;
        for &(p, q) in &closures {
            tracer.partner.insert(p, q);
            tracer.partner.insert(q, p);
        }

        let mut crossings: Vec<Crossing> = positions
            .iter()
            .map(|&(position, slot)| Crossing {
                position,
                slot,
                ports: [usize::MAX; 4],
                rising: (0, 0),
                falling: (0, 0),
            })
            .collect();
        let mut components = Vec::new();
        let mut arcs = Vec::new();
        let mut covered = BTreeMap::<Point, ()>::new();

        let mut starts: Vec<Point> = closures.iter().flat_map(|&(p, q)| [p, q]).collect();
        starts.sort();
        let mut cells: Vec<Point> = (0..b)
            .flat_map(|x| (0..a).map(move |y| (x, y)))
            .filter(|&c| spec.has_cell(c))
            .collect();
        cells.sort();

        loop {
            let start = if let Some(&p) = starts.iter().find(|&&p| !covered.contains_key(&cell_of(p, tracer.exit(p)))) {
                (p, tracer.exit(p), true)
            } else if let Some(&c) = cells.iter().find(|c| !covered.contains_key(c)) {
                let (p, d) = Self::loop_start(&tracer, c);
                (p, d, false)
            } else {
                break;
            };
            let comp = Self::trace_component(&tracer, start, components.len(), &mut covered, &mut crossings, &mut arcs);
            components.push(comp);
        }

        Ok(Self {
            spec,
            crossings,
            slots,
            arcs,
            components,
            closures,
        })
    }

    /// Pairs the pockets with crossingless closure arcs.
    fn close(tracer: &Tracer) -> Result<Vec<(Point, Point)>> {
        let spec = tracer.spec;
        let mut pockets: Vec<Point> = tracer
            .kinds
            .iter()
            .filter(|(_, k)| **k == PointKind::Pocket)
            .map(|(p, _)| *p)
            .collect();
        pockets.sort_by_key(|&p| spec.perimeter_position(p));

        let (a, b) = (spec.a as i32, spec.b as i32);
        let corner = |p: Point| (p.0 == 0 || p.0 == b) && (p.1 == 0 || p.1 == a);
        let notch: Vec<usize> = (0..pockets.len()).filter(|&i| !corner(pockets[i])).collect();

        let one_bumper = matches!(spec.bumpers, Bumpers::Removed { count: 1, .. });
        let n = pockets.len();
        let adjacent_notch = (0..n).find(|&i| notch.contains(&i) && notch.contains(&((i + 1) % n)));
        let mut pairs = Vec::new();
        if let (true, 4, 2, Some(first)) = (one_bumper, n, notch.len(), adjacent_notch) {
            // The two notch pockets are neighbours on the boundary; each is
            // closed to its other neighbour.
            let second = (first + 1) % n;
            pairs.push((pockets[first], pockets[(first + n - 1) % n]));
            pairs.push((pockets[second], pockets[(second + 1) % n]));
        } else {
            let mut seen = Vec::new();
            let mut sorted = pockets.clone();
            sorted.sort();
            for p in sorted {
                if seen.contains(&p) {
                    continue;
                }
                let q = tracer.trace_open(p);
                seen.push(p);
                seen.push(q);
                pairs.push((p, q));
            }
        }
        for pair in &mut pairs {
            if pair.1 < pair.0 {
                *pair = (pair.1, pair.0);
            }
        }
        pairs.sort();

        let pos = |p: Point| spec.perimeter_position(p);
        for (i, &(p, q)) in pairs.iter().enumerate() {
            let (lo, hi) = (pos(p).min(pos(q)), pos(p).max(pos(q)));
            for &(r, s) in &pairs[i + 1..] {
                let inside = |t: Point| lo < pos(t) && pos(t) < hi;
                if inside(r) != inside(s) {
                    return Err(Error::NonPlanarClosure);
                }
            }
        }
        Ok(pairs)
    }

    /// Start of the closed trajectory through `cell`: its lexicographically
    /// smallest point, leaving toward the larger of the two neighbours.
    fn loop_start(tracer: &Tracer, cell: Point) -> (Point, Dir) {
        let d0 = if (cell.0 + cell.1) % 2 == 0 { (1, 1) } else { (-1, 1) };
        let p0 = if d0 == (1, 1) { cell } else { (cell.0 + 1, cell.1) };
        let (mut p, mut d) = (p0, d0);
        let mut best = p0;
        loop {
            let q = (p.0 + d.0, p.1 + d.1);
            best = best.min(q);
            (p, d) = tracer.advance(q, d, false).expect("closed trajectory");
            if (p, d) == (p0, d0) {
                break;
            }
        }
        let n = *tracer.neighbours[&best].iter().max().unwrap();
        (best, (n.0 - best.0, n.1 - best.1))
    }

    fn trace_component(
        tracer: &Tracer,
        (p0, d0, long): (Point, Dir, bool),
        index: usize,
        covered: &mut BTreeMap<Point, ()>,
        crossings: &mut [Crossing],
        arcs: &mut Vec<Arc>,
    ) -> Component {
        let mut visits = Vec::new();
        let (mut p, mut d) = (p0, d0);
        loop {
            covered.insert(cell_of(p, d), ());
            let q = (p.0 + d.0, p.1 + d.1);
            if let PointKind::Crossing(c) = tracer.kinds[&q] {
                visits.push(Visit {
                    crossing: c,
                    direction: d,
                });
            }
            (p, d) = tracer.advance(q, d, true).expect("closures are complete");
            if (p, d) == (p0, d0) {
                break;
            }
        }

        let first = arcs.len();
        let mut comp_arcs = Vec::new();
        if visits.is_empty() {
            arcs.push(Arc {
                component: index,
                tail: None,
                head: None,
            });
            comp_arcs.push(first);
        }
        for (k, v) in visits.iter().enumerate() {
            let next = visits[(k + 1) % visits.len()];
            let id = first + k;
            let out_port = port_of(v.direction);
            let in_port = port_of((-next.direction.0, -next.direction.1));
            arcs.push(Arc {
                component: index,
                tail: Some((v.crossing, out_port)),
                head: Some((next.crossing, in_port)),
            });
            crossings[v.crossing].ports[out_port] = id;
            crossings[next.crossing].ports[in_port] = id;
            let x = &mut crossings[v.crossing];
            if v.direction.0 * v.direction.1 > 0 {
                x.rising = v.direction;
            } else {
                x.falling = v.direction;
            }
            comp_arcs.push(id);
        }
        Component {
            start: p0,
            start_direction: d0,
            long,
            visits,
            arcs: comp_arcs,
        }
    }

    pub fn spec(&self) -> TableSpec {
        self.spec
    }

    /// Crossings in canonical order.
    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Slot layout: `Some(crossing index)` or `None` for a skipped slot.
    pub fn slots(&self) -> &[Option<usize>] {
        &self.slots
    }

    pub fn slot_count(&self) -> usize {
        self.slots.len()
    }

    /// `true` at the slots that hold a crossing.
    pub fn slot_layout(&self) -> Vec<bool> {
        self.slots.iter().map(Option::is_some).collect()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Pocket pairs joined by closure arcs.
    pub fn closures(&self) -> &[(Point, Point)] {
        &self.closures
    }

    /// Places per-crossing signs into the slot layout.
    pub fn spread_signs(&self, signs: &[Sign]) -> Result<SignSequence> {
        SignSequence::spread(&self.slot_layout(), signs)
    }

    /// Every sign assignment in mask order.
    pub fn all_sign_sequences(&self) -> impl Iterator<Item = SignSequence> + '_ {
        let k = self.crossing_count();
        let layout = self.slot_layout();
        (0..1u64 << k).map(move |m| {
            let signs: Vec<Sign> = SignSequence::from_mask(k, m).crossing_signs().collect();
            SignSequence::spread(&layout, &signs).expect("layout matches")
        })
    }

    pub fn assign_signs(&self, signs: SignSequence) -> Result<SignedDiagram<'_>> {
        if signs.len() != self.slots.len() {
            return Err(Error::SignLengthMismatch {
                expected: self.slots.len(),
                got: signs.len(),
            });
        }
        let mut crossing_signs = Vec::with_capacity(self.crossings.len());
        for (i, (slot, sign)) in self.slots.iter().zip(signs.slots()).enumerate() {
            match (slot, sign) {
                (Some(_), Some(s)) => crossing_signs.push(*s),
                (Some(_), None) => return Err(Error::MissingSign(i)),
                (None, Some(_)) => return Err(Error::SignOnSkippedSlot(i)),
                (None, None) => {}
            }
        }
        Ok(SignedDiagram {
            diagram: self,
            signs,
            crossing_signs,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedDiagram<'d> {
    diagram: &'d BilliardDiagram,
    signs: SignSequence,
    crossing_signs: Vec<Sign>,
}

impl<'d> SignedDiagram<'d> {
    pub fn diagram(&self) -> &'d BilliardDiagram {
        self.diagram
    }

    pub fn signs(&self) -> &SignSequence {
        &self.signs
    }

    /// Signs of the crossings in canonical order.
    pub fn crossing_signs(&self) -> &[Sign] {
        &self.crossing_signs
    }

    pub fn writhe_direct(&self) -> i32 {
        self.diagram
            .crossings
            .iter()
            .zip(&self.crossing_signs)
            .map(|(c, s)| c.epsilon() * s.value())
            .sum()
    }

    /// Per crossing, the four arc labels (1-based) starting at the incoming
    /// under-strand. The table is read with `y` pointing down, so the order
    /// is clockwise in table coordinates and the usual `X[i,j,k,l]` bracket
    /// rule (A joins `i,l` and `j,k`) reproduces the oracle.
    pub fn pd_tuples(&self) -> Vec<[usize; 4]> {
        self.diagram
            .crossings
            .iter()
            .zip(&self.crossing_signs)
            .map(|(c, &s)| {
                let (_, under) = c.over_under(s);
                let start = port_of((-under.0, -under.1));
                core::array::from_fn(|k| c.ports[(start + 4 - k) % 4] + 1)
            })
            .collect()
    }

    /// Labels of arcs on components without crossings.
    pub fn free_loops(&self) -> Vec<usize> {
        (0..self.diagram.arcs.len())
            .filter(|&i| self.diagram.arcs[i].tail.is_none())
            .map(|i| i + 1)
            .collect()
    }

    /// `PD[X[i, j, k, l], ..., Loop[m]]`.
    pub fn pd_code(&self) -> String {
        let mut parts: Vec<String> = self
            .pd_tuples()
            .iter()
            .map(|t| format!("X[{}, {}, {}, {}]", t[0], t[1], t[2], t[3]))
            .collect();
        parts.extend(self.free_loops().iter().map(|l| format!("Loop[{l}]")));
        format!("PD[{}]", parts.join(", "))
    }

    /// Per component, the crossings met in traversal order as 1-based
    /// indices, negative when passing under.
    pub fn gauss_sequences(&self) -> Vec<Vec<i64>> {
        self.diagram
            .components
            .iter()
            .map(|comp| {
                comp.visits
                    .iter()
                    .map(|v| {
                        let (over, _) = self.diagram.crossings[v.crossing].over_under(self.crossing_signs[v.crossing]);
                        let on_top = (over.0 * over.1 > 0) == (v.direction.0 * v.direction.1 > 0);
                        let label = v.crossing as i64 + 1;
                        if on_top {
                            label
                        } else {
                            -label
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// `GaussCode[...]` for a knot, `GaussCode[{...}, {...}]` for a link.
    pub fn gauss_code(&self) -> String {
        let join = |s: &Vec<i64>| s.iter().map(|v| format!("{v}")).collect::<Vec<_>>().join(", ");
        let seqs = self.gauss_sequences();
        if seqs.len() == 1 {
            format!("GaussCode[{}]", join(&seqs[0]))
        } else {
            let parts: Vec<String> = seqs.iter().map(|s| format!("{{{}}}", join(s))).collect();
            format!("GaussCode[{}]", parts.join(", "))
        }
    }
}
