// Writes the test meshes as OBJ files into the given directory.
#include <fstream>
#include <iostream>
#include <string>

#include "meshes.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: mesh_fixtures DIR\n";
    return 2;
  }
  const std::string dir = argv[1];
  using namespace nielson::testing;
  const struct {
    const char* name;
    RawMesh mesh;
  } items[] = {
      {"cube.obj", perturbed(cube(), 0.05, 1)},
      {"icosphere1.obj", perturbed(icosphere(1), 0.02, 2)},
      {"uvsphere_102.obj", perturbed(uv_sphere(10, 10), 0.01, 3)},
      {"uvsphere_959.obj", perturbed(uv_sphere(29, 33), 0.002, 4)},
      {"open_square.obj", open_square()},
  };
  for (const auto& it : items) {
    std::ofstream out(dir + "/" + it.name);
    out << to_obj(it.mesh);
  }
  return 0;
}
