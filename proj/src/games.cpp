#include "taskforge/task.hpp"

namespace forge {

void register_game_tasks(Registry& reg) { (void)reg; }

}  // namespace forge
