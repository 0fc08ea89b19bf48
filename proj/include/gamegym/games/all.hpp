#pragma once

#include "gamegym/games/bwcopy.hpp"
#include "gamegym/games/game2048.hpp"
#include "gamegym/games/hanoi.hpp"
#include "gamegym/games/lights_out.hpp"
#include "gamegym/games/maze.hpp"
#include "gamegym/games/minesweeper.hpp"
#include "gamegym/games/npoint.hpp"
#include "gamegym/games/one_stroke.hpp"
#include "gamegym/games/puzzle8.hpp"
#include "gamegym/games/snake.hpp"
#include "gamegym/games/sokoban.hpp"
#include "gamegym/games/sudoku.hpp"
#include "gamegym/games/trust.hpp"
#include "gamegym/games/wordle.hpp"

namespace gamegym::games {

/// Registers the full game catalog.
inline void register_all(GameRegistry& registry) {
    registry.add(std::make_unique<HanoiGame>());
    registry.add(std::make_unique<LightsOutGame>());
    registry.add(std::make_unique<SudokuGame>());
    registry.add(std::make_unique<OneStrokeGame>());
    registry.add(std::make_unique<WordleGame>());
    registry.add(std::make_unique<MazeGame>());
    registry.add(std::make_unique<SokobanGame>());
    registry.add(std::make_unique<Puzzle8Game>());
    registry.add(std::make_unique<Game2048>());
    registry.add(std::make_unique<NPointGame>());
    registry.add(std::make_unique<TrustGame>());
    registry.add(std::make_unique<MinesweeperGame>());
    registry.add(std::make_unique<SnakeGame>());
    registry.add(std::make_unique<BWCopyGame>());
}

inline GameRegistry make_default_registry() {
    GameRegistry registry;
    register_all(registry);
    return registry;
}

}  // namespace gamegym::games
