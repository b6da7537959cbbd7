use alcove_cli::svg::{render_svg, RenderError, Scene};
use alcove_core::shadow::{enumerate_pf_galleries, shadow_oracle, DEFAULT_CAP};
use alcove_core::{minimal_gallery, Chimney, FaceType, RootSystem};

fn vertex_scene(rs: &RootSystem, c: &Chimney) -> String {
    let v = FaceType::vertex(2);
    let x = rs.x_lambda(&[2, 2]).unwrap();
    let g = minimal_gallery(rs, &x, v, v).unwrap();
    let mut scene = Scene::new(rs, 3);
    scene.chimney = Some(c);
    scene.shadow =
        shadow_oracle(rs, &x, v, v, c, DEFAULT_CAP).unwrap().into_iter().map(|(s, m)| (s, Some(m))).collect();
    scene.galleries = enumerate_pf_galleries(rs, g.gallery_type(), c);
    render_svg(&scene).unwrap()
}

#[test]
fn same_scene_same_bytes() {
    let rs = RootSystem::from_name("A2").unwrap();
    let c = Chimney::new(&rs, FaceType::from_letters(&[1], 2).unwrap(), rs.identity());
    assert_eq!(vertex_scene(&rs, &c), vertex_scene(&rs, &c));
}

#[test]
fn one_polyline_per_gallery() {
    let rs = RootSystem::from_name("A2").unwrap();
    let c = Chimney::new(&rs, FaceType::from_letters(&[1], 2).unwrap(), rs.identity());
    let svg = vertex_scene(&rs, &c);
    let v = FaceType::vertex(2);
    let x = rs.x_lambda(&[2, 2]).unwrap();
    let total: usize = shadow_oracle(&rs, &x, v, v, &c, DEFAULT_CAP).unwrap().values().sum();
    assert_eq!(svg.matches("<polyline").count(), total);
}

#[test]
fn layers_come_in_order() {
    let rs = RootSystem::from_name("G2").unwrap();
    let c = Chimney::new(&rs, FaceType::from_letters(&[2], 2).unwrap(), rs.identity());
    let mut scene = Scene::new(&rs, 2);
    scene.chimney = Some(&c);
    let svg = render_svg(&scene).unwrap();
    let at = |id: &str| svg.find(&format!("<g id=\"{id}\"")).unwrap();
    let order = ["background", "hyperplanes", "sector", "shadow", "galleries", "labels"].map(at);
    assert!(order.windows(2).all(|w| w[0] < w[1]));
    assert!(!svg.contains("-0.0000"));
}

#[test]
fn rank_three_is_rejected() {
    let rs = RootSystem::from_name("A3").unwrap();
    assert_eq!(render_svg(&Scene::new(&rs, 2)), Err(RenderError::Rank(3)));
    let rs = RootSystem::from_name("A2").unwrap();
    assert_eq!(render_svg(&Scene::new(&rs, 0)), Err(RenderError::Window(0)));
}
