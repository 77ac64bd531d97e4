pub mod addcode;
pub mod fixtures;
pub mod formats;
pub mod gf4;
pub mod metagraph;
pub mod searcher;
pub mod verify;
