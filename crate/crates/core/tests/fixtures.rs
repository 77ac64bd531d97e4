use metacode::fixtures::{all, fixture};
use metacode::formats::{parse_edge_table, render_edge_table};
use metacode::metagraph::{border, build_metacirculant, build_metacirculant_labeled, Labeling};

#[test]
fn printed_tables_match_offset_major_numbering() {
    let mut checked = 0;
    for f in all() {
        let Some(table) = f.edge_table else { continue };
        let printed = parse_edge_table(table).unwrap();
        let built = build_metacirculant_labeled(&f.spec, Labeling::OffsetMajor).unwrap();
        assert_eq!(printed.n(), built.n(), "{}", f.name);
        assert_eq!(printed.edges(), built.edges(), "{}", f.name);
        // the block-by-block numbering gives an isomorphic but different edge set
        let block = build_metacirculant_labeled(&f.spec, Labeling::BlockMajor).unwrap();
        assert_ne!(printed.edges(), block.edges(), "{}", f.name);
        checked += 1;
    }
    assert_eq!(checked, 5);
}

#[test]
fn printed_edge_counts() {
    for (name, edges) in [("G28", 154), ("G36_1", 198), ("G36_2", 342), ("G80_1", 1640), ("G93", 1302)] {
        let f = fixture(name).unwrap();
        assert_eq!(parse_edge_table(f.edge_table.unwrap()).unwrap().edge_count(), edges);
        assert_eq!(build_metacirculant(&f.spec).unwrap().edge_count(), edges);
    }
}

#[test]
fn g93_table_groups() {
    // the table groups its rows by the blocks of i and j; with vertices
    // 1-31, 32-62 and 63-93 as the three groups the printed counts agree
    let g = build_metacirculant_labeled(&fixture("G93").unwrap().spec, Labeling::OffsetMajor).unwrap();
    let group = |v: usize| v / 31;
    let mut counts = [[0usize; 3]; 3];
    for (u, v) in g.edges() {
        counts[group(u)][group(v)] += 1;
    }
    assert_eq!(
        [counts[0][0], counts[1][1], counts[2][2], counts[0][1], counts[0][2], counts[1][2]],
        [48, 49, 48, 385, 387, 385]
    );
    assert_eq!(counts[1][0] + counts[2][0] + counts[2][1], 0);
}

#[test]
fn edge_tables_round_trip() {
    for f in all() {
        let g = build_metacirculant(&f.spec).unwrap();
        for h in [g.clone(), border(&g)] {
            let back = parse_edge_table(&render_edge_table(&h)).unwrap();
            assert_eq!(back.n(), h.n());
            assert_eq!(back.edges(), h.edges(), "{}", f.name);
        }
    }
}
