//! Face lists of the named maps on at most 12 vertices.

use crate::map::Surface;

pub(crate) struct RawEntry {
    pub name: &'static str,
    pub map_type: &'static str,
    pub surface: Surface,
    pub n_vertices: usize,
    pub faces: &'static [&'static [usize]],
}

pub(crate) const RAW: &[RawEntry] = &[
    RawEntry {
        name: "A1(K)",
        map_type: "[3^6:3^4.6]",
        surface: Surface::KleinBottle,
        n_vertices: 11,
        faces: &[
            &[0, 1, 2, 3, 4, 5],
            &[0, 1, 8],
            &[0, 5, 6],
            &[0, 6, 7],
            &[0, 7, 8],
            &[1, 2, 6],
            &[1, 6, 9],
            &[1, 8, 9],
            &[2, 3, 10],
            &[2, 6, 7],
            &[2, 7, 10],
            &[3, 4, 8],
            &[3, 8, 9],
            &[3, 9, 10],
            &[4, 5, 10],
            &[4, 7, 8],
            &[4, 7, 10],
            &[5, 6, 9],
            &[5, 9, 10],
        ],
    },
    RawEntry {
        name: "A2(T)",
        map_type: "[3^6:3^4.6]",
        surface: Surface::Torus,
        n_vertices: 12,
        faces: &[
            &[0, 1, 2, 3, 4, 5],
            &[0, 1, 8],
            &[0, 5, 6],
            &[0, 6, 7],
            &[0, 7, 8],
            &[1, 2, 10],
            &[1, 8, 9],
            &[1, 9, 10],
            &[2, 3, 11],
            &[2, 6, 10],
            &[2, 6, 11],
            &[3, 4, 7],
            &[3, 7, 8],
            &[3, 8, 11],
            &[4, 5, 9],
            &[4, 7, 10],
            &[4, 9, 10],
            &[5, 6, 11],
            &[5, 9, 11],
            &[6, 7, 10],
            &[8, 9, 11],
        ],
    },
    RawEntry {
        name: "A3(T)",
        map_type: "[3^6:3^4.6]",
        surface: Surface::Torus,
        n_vertices: 11,
        faces: &[
            &[0, 1, 2, 3, 4, 5],
            &[0, 1, 8],
            &[0, 5, 6],
            &[0, 6, 7],
            &[0, 7, 8],
            &[1, 2, 10],
            &[1, 8, 9],
            &[1, 9, 10],
            &[2, 3, 6],
            &[2, 6, 7],
            &[2, 7, 10],
            &[3, 4, 8],
            &[3, 6, 9],
            &[3, 8, 9],
            &[4, 5, 10],
            &[4, 7, 8],
            &[4, 7, 10],
            &[5, 6, 9],
            &[5, 9, 10],
        ],
    },
    RawEntry {
        name: "B1(K)",
        map_type: "[3^3.4^2:3.4.6.4]",
        surface: Surface::KleinBottle,
        n_vertices: 12,
        faces: &[
            &[0, 1, 2, 3, 4, 5],
            &[0, 1, 9, 8],
            &[0, 5, 6, 7],
            &[0, 7, 8],
            &[1, 2, 11, 10],
            &[1, 9, 10],
            &[2, 3, 9, 8],
            &[2, 8, 11],
            &[3, 4, 7, 6],
            &[3, 6, 9],
            &[4, 5, 10, 11],
            &[4, 7, 11],
            &[5, 6, 10],
            &[6, 9, 10],
            &[7, 8, 11],
        ],
    },
    RawEntry {
        name: "B2(T)",
        map_type: "[3^3.4^2:3.4.6.4]",
        surface: Surface::Torus,
        n_vertices: 12,
        faces: &[
            &[0, 1, 2, 3, 4, 5],
            &[0, 1, 9, 8],
            &[0, 5, 6, 7],
            &[0, 7, 8],
            &[1, 2, 11, 10],
            &[1, 9, 10],
            &[2, 3, 6, 7],
            &[2, 7, 11],
            &[3, 4, 8, 9],
            &[3, 6, 9],
            &[4, 5, 10, 11],
            &[4, 8, 11],
            &[5, 6, 10],
            &[6, 9, 10],
            &[7, 8, 11],
        ],
    },
    RawEntry {
        name: "C1(K)",
        map_type: "[3^2.4.3.4:3.4.6.4]",
        surface: Surface::KleinBottle,
        n_vertices: 12,
        faces: &[
            &[0, 1, 2, 3, 4, 5],
            &[0, 1, 9, 8],
            &[0, 5, 6, 7],
            &[0, 7, 8],
            &[1, 2, 6, 10],
            &[1, 9, 10],
            &[2, 3, 9, 11],
            &[2, 6, 11],
            &[3, 4, 7, 10],
            &[3, 9, 10],
            &[4, 5, 11, 8],
            &[4, 7, 8],
            &[5, 6, 11],
            &[6, 7, 10],
            &[8, 9, 11],
        ],
    },
    RawEntry {
        name: "C2(T)",
        map_type: "[3^2.4.3.4:3.4.6.4]",
        surface: Surface::Torus,
        n_vertices: 12,
        faces: &[
            &[0, 1, 2, 3, 4, 5],
            &[0, 1, 9, 8],
            &[0, 5, 6, 7],
            &[0, 7, 8],
            &[1, 2, 6, 10],
            &[1, 9, 10],
            &[2, 3, 8, 11],
            &[2, 6, 11],
            &[3, 4, 10, 7],
            &[3, 7, 8],
            &[4, 5, 11, 9],
            &[4, 9, 10],
            &[5, 6, 11],
            &[6, 7, 10],
            &[8, 9, 11],
        ],
    },
    RawEntry {
        name: "D1(K)",
        map_type: "[3^6:3^2.4.3.4]",
        surface: Surface::KleinBottle,
        n_vertices: 11,
        faces: &[
            &[0, 1, 2],
            &[0, 1, 6],
            &[0, 2, 3],
            &[0, 3, 4],
            &[0, 4, 5],
            &[0, 5, 6],
            &[1, 2, 5, 4],
            &[1, 4, 7],
            &[1, 6, 8, 7],
            &[2, 3, 8, 10],
            &[2, 5, 10],
            &[3, 4, 7, 9],
            &[3, 8, 9],
            &[5, 6, 9, 10],
            &[6, 8, 9],
            &[7, 8, 10],
            &[7, 9, 10],
        ],
    },
    RawEntry {
        name: "E1(K)",
        map_type: "[3^6:3^3.4^2]",
        surface: Surface::KleinBottle,
        n_vertices: 9,
        faces: &[
            &[0, 1, 2, 3],
            &[0, 1, 7, 6],
            &[0, 3, 4],
            &[0, 4, 5],
            &[0, 5, 6],
            &[1, 2, 5],
            &[1, 4, 5],
            &[1, 4, 7],
            &[2, 3, 6, 7],
            &[2, 5, 8],
            &[2, 7, 8],
            &[3, 4, 8],
            &[3, 6, 8],
            &[4, 7, 8],
            &[5, 6, 8],
        ],
    },
    RawEntry {
        name: "E2(K)",
        map_type: "[3^6:3^3.4^2]",
        surface: Surface::KleinBottle,
        n_vertices: 12,
        faces: &[
            &[0, 1, 2, 3],
            &[0, 1, 7, 6],
            &[0, 3, 4],
            &[0, 4, 5],
            &[0, 5, 6],
            &[1, 2, 5],
            &[1, 4, 5],
            &[1, 4, 7],
            &[2, 3, 9, 10],
            &[2, 5, 11],
            &[2, 10, 11],
            &[3, 4, 8],
            &[3, 8, 9],
            &[4, 7, 8],
            &[5, 6, 11],
            &[6, 7, 10, 9],
            &[6, 9, 11],
            &[7, 8, 10],
            &[8, 9, 11],
            &[8, 10, 11],
        ],
    },
    RawEntry {
        name: "E3(T)",
        map_type: "[3^6:3^3.4^2]",
        surface: Surface::Torus,
        n_vertices: 9,
        faces: &[
            &[0, 1, 2, 3],
            &[0, 1, 7, 6],
            &[0, 3, 4],
            &[0, 4, 5],
            &[0, 5, 6],
            &[1, 2, 8],
            &[1, 4, 7],
            &[1, 4, 8],
            &[2, 3, 6, 7],
            &[2, 5, 7],
            &[2, 5, 8],
            &[3, 4, 8],
            &[3, 6, 8],
            &[4, 5, 7],
            &[5, 6, 8],
        ],
    },
    RawEntry {
        name: "E4(T)",
        map_type: "[3^6:3^3.4^2]",
        surface: Surface::Torus,
        n_vertices: 12,
        faces: &[
            &[0, 1, 2, 3],
            &[0, 1, 7, 6],
            &[0, 3, 4],
            &[0, 4, 5],
            &[0, 5, 6],
            &[1, 2, 8],
            &[1, 4, 7],
            &[1, 4, 8],
            &[2, 3, 9, 10],
            &[2, 8, 11],
            &[2, 10, 11],
            &[3, 4, 8],
            &[3, 8, 9],
            &[4, 5, 7],
            &[5, 6, 11],
            &[5, 7, 10],
            &[5, 10, 11],
            &[6, 7, 10, 9],
            &[6, 9, 11],
            &[8, 9, 11],
        ],
    },
    RawEntry {
        name: "E5(K)",
        map_type: "[3^6:3^3.4^2]",
        surface: Surface::KleinBottle,
        n_vertices: 9,
        faces: &[
            &[0, 1, 2, 3],
            &[0, 1, 7, 6],
            &[0, 3, 4],
            &[0, 4, 5],
            &[0, 5, 6],
            &[1, 2, 4],
            &[1, 4, 5],
            &[1, 5, 7],
            &[2, 3, 7, 6],
            &[2, 4, 8],
            &[2, 6, 8],
            &[3, 4, 8],
            &[3, 7, 8],
            &[5, 6, 8],
            &[5, 7, 8],
        ],
    },
    RawEntry {
        name: "E6(T)",
        map_type: "[3^6:3^3.4^2]",
        surface: Surface::Torus,
        n_vertices: 9,
        faces: &[
            &[0, 1, 2, 3],
            &[0, 1, 7, 6],
            &[0, 3, 4],
            &[0, 4, 5],
            &[0, 5, 6],
            &[1, 2, 4],
            &[1, 4, 5],
            &[1, 5, 7],
            &[2, 3, 6, 7],
            &[2, 4, 8],
            &[2, 7, 8],
            &[3, 4, 8],
            &[3, 6, 8],
            &[5, 6, 8],
            &[5, 7, 8],
        ],
    },
    RawEntry {
        name: "E7(K)",
        map_type: "[3^6:3^3.4^2]",
        surface: Surface::KleinBottle,
        n_vertices: 12,
        faces: &[
            &[0, 1, 2, 3],
            &[0, 1, 7, 6],
            &[0, 3, 4],
            &[0, 4, 5],
            &[0, 5, 6],
            &[1, 2, 4],
            &[1, 4, 5],
            &[1, 5, 7],
            &[2, 3, 11, 10],
            &[2, 4, 9],
            &[2, 9, 10],
            &[3, 4, 9],
            &[3, 9, 11],
            &[5, 6, 8],
            &[5, 7, 8],
            &[6, 7, 11, 10],
            &[6, 8, 10],
            &[7, 8, 11],
            &[8, 9, 10],
            &[8, 9, 11],
        ],
    },
    RawEntry {
        name: "E8(T)",
        map_type: "[3^6:3^3.4^2]",
        surface: Surface::Torus,
        n_vertices: 12,
        faces: &[
            &[0, 1, 2, 3],
            &[0, 1, 7, 6],
            &[0, 3, 4],
            &[0, 4, 5],
            &[0, 5, 6],
            &[1, 2, 4],
            &[1, 4, 5],
            &[1, 5, 7],
            &[2, 3, 11, 10],
            &[2, 4, 9],
            &[2, 9, 10],
            &[3, 4, 9],
            &[3, 9, 11],
            &[5, 6, 8],
            &[5, 7, 8],
            &[6, 7, 10, 11],
            &[6, 8, 11],
            &[7, 8, 10],
            &[8, 9, 10],
            &[8, 9, 11],
        ],
    },
    RawEntry {
        name: "E9(K)",
        map_type: "[3^6:3^3.4^2]",
        surface: Surface::KleinBottle,
        n_vertices: 12,
        faces: &[
            &[0, 1, 2, 3],
            &[0, 1, 7, 6],
            &[0, 3, 4],
            &[0, 4, 5],
            &[0, 5, 6],
            &[1, 2, 8],
            &[1, 5, 7],
            &[1, 5, 8],
            &[2, 3, 9, 10],
            &[2, 8, 11],
            &[2, 10, 11],
            &[3, 4, 11],
            &[3, 9, 11],
            &[4, 5, 7],
            &[4, 7, 10],
            &[4, 10, 11],
            &[5, 6, 8],
            &[6, 7, 10, 9],
            &[6, 8, 9],
            &[8, 9, 11],
        ],
    },
    RawEntry {
        name: "E10(K)",
        map_type: "[3^6:3^3.4^2]",
        surface: Surface::KleinBottle,
        n_vertices: 12,
        faces: &[
            &[0, 1, 2, 3],
            &[0, 1, 7, 6],
            &[0, 3, 4],
            &[0, 4, 5],
            &[0, 5, 6],
            &[1, 2, 9],
            &[1, 7, 8],
            &[1, 8, 9],
            &[2, 3, 6, 7],
            &[2, 7, 10],
            &[2, 9, 10],
            &[3, 4, 11],
            &[3, 6, 11],
            &[4, 5, 10],
            &[4, 9, 10],
            &[4, 9, 11],
            &[5, 6, 11],
            &[5, 8, 10],
            &[5, 8, 11],
            &[7, 8, 10],
            &[8, 9, 11],
        ],
    },
    RawEntry {
        name: "E11(T)",
        map_type: "[3^6:3^3.4^2]",
        surface: Surface::Torus,
        n_vertices: 12,
        faces: &[
            &[0, 1, 2, 3],
            &[0, 1, 7, 6],
            &[0, 3, 4],
            &[0, 4, 5],
            &[0, 5, 6],
            &[1, 2, 9],
            &[1, 7, 8],
            &[1, 8, 9],
            &[2, 3, 11, 10],
            &[2, 5, 9],
            &[2, 5, 10],
            &[3, 4, 8],
            &[3, 8, 11],
            &[4, 5, 10],
            &[4, 7, 8],
            &[4, 7, 10],
            &[5, 6, 9],
            &[6, 7, 10, 11],
            &[6, 9, 11],
            &[8, 9, 11],
        ],
    },
    RawEntry {
        name: "E12(T)",
        map_type: "[3^6:3^3.4^2]",
        surface: Surface::Torus,
        n_vertices: 12,
        faces: &[
            &[0, 1, 2, 3],
            &[0, 1, 7, 6],
            &[0, 3, 4],
            &[0, 4, 5],
            &[0, 5, 6],
            &[1, 2, 9],
            &[1, 7, 8],
            &[1, 8, 9],
            &[2, 3, 6, 7],
            &[2, 7, 10],
            &[2, 9, 10],
            &[3, 4, 11],
            &[3, 6, 11],
            &[4, 5, 10],
            &[4, 8, 10],
            &[4, 8, 11],
            &[5, 6, 11],
            &[5, 9, 10],
            &[5, 9, 11],
            &[7, 8, 10],
            &[8, 9, 11],
        ],
    },
    RawEntry {
        name: "E13(T)",
        map_type: "[3^6:3^3.4^2]",
        surface: Surface::Torus,
        n_vertices: 12,
        faces: &[
            &[0, 1, 2, 3],
            &[0, 1, 7, 6],
            &[0, 3, 4],
            &[0, 4, 5],
            &[0, 5, 6],
            &[1, 2, 9],
            &[1, 7, 8],
            &[1, 8, 9],
            &[2, 3, 6, 7],
            &[2, 7, 10],
            &[2, 9, 10],
            &[3, 4, 11],
            &[3, 6, 11],
            &[4, 5, 8],
            &[4, 8, 9],
            &[4, 9, 11],
            &[5, 6, 11],
            &[5, 8, 10],
            &[5, 10, 11],
            &[7, 8, 10],
            &[9, 10, 11],
        ],
    },
    RawEntry {
        name: "F1(K)",
        map_type: "[3^3.4^2:4^4]",
        surface: Surface::KleinBottle,
        n_vertices: 12,
        faces: &[
            &[0, 1, 2, 3],
            &[0, 1, 8, 7],
            &[0, 3, 4, 5],
            &[0, 5, 6, 7],
            &[1, 2, 5],
            &[1, 4, 5],
            &[1, 4, 8],
            &[2, 3, 10, 9],
            &[2, 5, 6],
            &[2, 6, 9],
            &[3, 4, 11, 10],
            &[4, 8, 11],
            &[6, 7, 10, 11],
            &[6, 9, 11],
            &[7, 8, 9, 10],
            &[8, 9, 11],
        ],
    },
    RawEntry {
        name: "F2(T)",
        map_type: "[3^3.4^2:4^4]",
        surface: Surface::Torus,
        n_vertices: 9,
        faces: &[
            &[0, 1, 2, 3],
            &[0, 1, 8, 7],
            &[0, 3, 4, 5],
            &[0, 5, 6, 7],
            &[1, 2, 6],
            &[1, 4, 6],
            &[1, 4, 8],
            &[2, 3, 7, 8],
            &[2, 5, 6],
            &[2, 5, 8],
            &[3, 4, 6, 7],
            &[4, 5, 8],
        ],
    },
    RawEntry {
        name: "F3(T)",
        map_type: "[3^3.4^2:4^4]",
        surface: Surface::Torus,
        n_vertices: 12,
        faces: &[
            &[0, 1, 2, 3],
            &[0, 1, 8, 7],
            &[0, 3, 4, 5],
            &[0, 5, 6, 7],
            &[1, 2, 9],
            &[1, 4, 8],
            &[1, 4, 9],
            &[2, 3, 11, 10],
            &[2, 6, 9],
            &[2, 6, 10],
            &[3, 4, 9, 11],
            &[4, 5, 8],
            &[5, 6, 10],
            &[5, 8, 10],
            &[6, 7, 11, 9],
            &[7, 8, 10, 11],
        ],
    },
    RawEntry {
        name: "F4(K)",
        map_type: "[3^3.4^2:4^4]",
        surface: Surface::KleinBottle,
        n_vertices: 9,
        faces: &[
            &[0, 1, 2, 3],
            &[0, 1, 8, 7],
            &[0, 3, 4, 5],
            &[0, 5, 6, 7],
            &[1, 2, 6],
            &[1, 5, 6],
            &[1, 5, 8],
            &[2, 3, 7, 8],
            &[2, 4, 6],
            &[2, 4, 8],
            &[3, 4, 6, 7],
            &[4, 5, 8],
        ],
    },
    RawEntry {
        name: "F5(T)",
        map_type: "[3^3.4^2:4^4]",
        surface: Surface::Torus,
        n_vertices: 9,
        faces: &[
            &[0, 1, 2, 3],
            &[0, 1, 8, 7],
            &[0, 3, 4, 5],
            &[0, 5, 6, 7],
            &[1, 2, 4],
            &[1, 4, 5],
            &[1, 5, 8],
            &[2, 3, 7, 8],
            &[2, 4, 6],
            &[2, 6, 8],
            &[3, 4, 6, 7],
            &[5, 6, 8],
        ],
    },
    RawEntry {
        name: "F6(T)",
        map_type: "[3^3.4^2:4^4]",
        surface: Surface::Torus,
        n_vertices: 12,
        faces: &[
            &[0, 1, 2, 3],
            &[0, 1, 8, 7],
            &[0, 3, 4, 5],
            &[0, 5, 6, 7],
            &[1, 2, 4],
            &[1, 4, 5],
            &[1, 5, 8],
            &[2, 3, 10, 9],
            &[2, 4, 11],
            &[2, 9, 11],
            &[3, 4, 11, 10],
            &[5, 6, 8],
            &[6, 7, 10, 11],
            &[6, 8, 9],
            &[6, 9, 11],
            &[7, 8, 9, 10],
        ],
    },
    RawEntry {
        name: "F7(T)",
        map_type: "[3^3.4^2:4^4]",
        surface: Surface::Torus,
        n_vertices: 12,
        faces: &[
            &[0, 1, 2, 3],
            &[0, 1, 8, 7],
            &[0, 3, 4, 5],
            &[0, 5, 6, 7],
            &[1, 2, 10],
            &[1, 8, 9],
            &[1, 9, 10],
            &[2, 3, 7, 8],
            &[2, 8, 11],
            &[2, 10, 11],
            &[3, 4, 6, 7],
            &[4, 5, 9, 10],
            &[4, 6, 11, 10],
            &[5, 6, 11, 9],
            &[8, 9, 11],
        ],
    },
    RawEntry {
        name: "F8(K)",
        map_type: "[3^3.4^2:4^4]",
        surface: Surface::KleinBottle,
        n_vertices: 12,
        faces: &[
            &[0, 1, 2, 3],
            &[0, 1, 8, 7],
            &[0, 3, 4, 5],
            &[0, 5, 6, 7],
            &[1, 2, 10],
            &[1, 8, 9],
            &[1, 9, 10],
            &[2, 3, 7, 8],
            &[2, 8, 11],
            &[2, 10, 11],
            &[3, 4, 6, 7],
            &[4, 5, 11, 10],
            &[4, 6, 9, 10],
            &[5, 6, 9, 11],
            &[8, 9, 11],
        ],
    },
    RawEntry {
        name: "F9(T)",
        map_type: "[3^3.4^2:4^4]",
        surface: Surface::Torus,
        n_vertices: 12,
        faces: &[
            &[0, 1, 2, 3],
            &[0, 1, 8, 7],
            &[0, 3, 4, 5],
            &[0, 5, 6, 7],
            &[1, 2, 10],
            &[1, 8, 9],
            &[1, 9, 10],
            &[2, 3, 7, 8],
            &[2, 8, 11],
            &[2, 10, 11],
            &[3, 4, 6, 7],
            &[4, 5, 11, 9],
            &[4, 6, 10, 9],
            &[5, 6, 10, 11],
            &[8, 9, 11],
        ],
    },
];
