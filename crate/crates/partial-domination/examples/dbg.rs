use partial_domination::*;
fn main() {
    let g = Graph::from_edges(4, &[(0,3),(1,3)]).unwrap();
    let summary = verify_graph(&g, "g");
    for r in summary.violations() {
        println!("{:?}", r);
    }
}
