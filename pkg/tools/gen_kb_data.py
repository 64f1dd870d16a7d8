"""One-time generator for the TRIZ knowledge-base JSON bundle.

Emits parameters.json, principles.json, and matrix.json into
src/triz_engine/kb/data/.  The matrix is the classical 39x39 contradiction
matrix with principle indexes renumbered so that Strong Oxidants sits at 39
and Inert Atmosphere at 38 (the numbering the shipped principle table uses);
the anchored cells (6,13), (9,13), (6,22), (12,22), (39,6) are verified at
the end.
"""

import json
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "triz_engine" / "kb" / "data"

PARAMETERS = [
    (1, "Weight of moving object",
     "The mass of an object that changes position under its own power or an external one; "
     "in a gravitational field, the force the body exerts on its support or suspension."),
    (2, "Weight of stationary object",
     "The mass of an object that does not change position; the force a fixed body exerts "
     "on its support or suspension."),
    (3, "Length of moving object",
     "Any linear dimension of a moving object, not necessarily the longest one."),
    (4, "Length of stationary object",
     "Any linear dimension of a stationary object, not necessarily the longest one."),
    (5, "Area of moving object",
     "The measure of any internal or external surface of a moving object, whether a bounded "
     "plane region or the area an object occupies."),
    (6, "Area of stationary object",
     "The measure of any internal or external surface of a stationary object."),
    (7, "Volume of moving object",
     "The cubic measure of space occupied by a moving object."),
    (8, "Volume of stationary object",
     "The cubic measure of space occupied by a stationary object."),
    (9, "Speed",
     "The velocity of an object, or the rate of any process or action in time."),
    (10, "Force",
     "Any interaction intended to change an object's condition; the capacity to produce "
     "full or partial, permanent or temporary change."),
    (11, "Stress or pressure",
     "Force per unit area acting on or within an object; includes tension."),
    (12, "Shape",
     "The external contour or appearance of an object or system."),
    (13, "Stability of the object's composition",
     "The wholeness or integrity of a system and the relationship of its constituent "
     "elements; wear, decomposition, and disassembly all reduce stability."),
    (14, "Strength",
     "The extent to which an object can resist changing in response to force; resistance "
     "to breaking."),
    (15, "Duration of action of moving object",
     "The time a moving object can perform its action; service life or mean time between "
     "failures."),
    (16, "Duration of action of stationary object",
     "The time a stationary object can perform its action; service life or mean time "
     "between failures."),
    (17, "Temperature",
     "The thermal condition of an object or system, including parameters such as heat "
     "capacity that affect the rate of temperature change."),
    (18, "Illumination intensity",
     "Light flux per unit area, and other illumination characteristics of a system such "
     "as brightness and light quality."),
    (19, "Use of energy by moving object",
     "The energy a moving object must expend to perform its function, including energy "
     "supplied by external sources."),
    (20, "Use of energy by stationary object",
     "The energy a stationary object must expend to perform its function, including "
     "energy supplied by external sources."),
    (21, "Power",
     "The rate at which work is performed; the rate of energy use."),
    (22, "Loss of energy",
     "Energy expended that does not contribute to the useful function of the system."),
    (23, "Loss of substance",
     "Partial or complete, permanent or temporary loss of a system's materials, "
     "substances, or parts."),
    (24, "Loss of information",
     "Partial or complete, permanent or temporary loss of data in or access to data by a "
     "system, including sensory information."),
    (25, "Loss of time",
     "Time spent on or wasted by an activity; reducing cycle time improves this "
     "parameter."),
    (26, "Quantity of substance",
     "The number or amount of a system's materials, substances, or parts that might be "
     "changed fully or partially."),
    (27, "Reliability",
     "A system's ability to perform its intended function in a predictable way under "
     "stated conditions."),
    (28, "Measurement accuracy",
     "The closeness of a measured value to the actual value of a system property; "
     "reducing measurement error improves this parameter."),
    (29, "Manufacturing precision",
     "The extent to which the actual characteristics of a manufactured system match the "
     "specified or required characteristics."),
    (30, "External harm affects the object",
     "The susceptibility of a system to harmful effects generated outside it."),
    (31, "Object-generated harmful factors",
     "Harmful effects that the object or system itself generates, reducing the efficiency "
     "or quality of its own or another system's functioning."),
    (32, "Ease of manufacture",
     "The degree of facility, comfort, or effortlessness in fabricating the object or "
     "system."),
    (33, "Ease of operation",
     "Simplicity of use: a process is hard to operate if it requires many people, many "
     "steps, or special tools; easy processes work right with small effort."),
    (34, "Ease of repair",
     "Quality characteristics such as convenience, simplicity, and time needed to repair "
     "faults or failures in a system."),
    (35, "Adaptability or versatility",
     "The extent to which a system responds positively to external changes, and its "
     "capacity to be used in multiple ways under a variety of circumstances."),
    (36, "Device complexity",
     "The number and diversity of elements in a system and of the relationships among "
     "them, including the user as a system element."),
    (37, "Difficulty of detecting and measuring",
     "The cost, time, and labor of monitoring or measuring a system; complex measurement "
     "setups and complicated component relationships worsen this parameter."),
    (38, "Extent of automation",
     "The ability of a system to perform its functions without human interaction; the "
     "scope of operations carried out without intervention."),
    (39, "Productivity",
     "The number of functions or operations a system performs per unit time; the output "
     "per unit time or the cost per unit of output."),
]

PRINCIPLES = [
    (1, "Segmentation",
     "The Segmentation principle encourages dividing an object or system into smaller "
     "independent parts, making it sectional, making it easy to assemble or disassemble, "
     "and increasing its degree of divisibility or fragmentation."),
    (2, "Extraction",
     "The Extraction principle encourages removing a disturbing part or property from an "
     "object, or singling out the only necessary part or property and using it alone."),
    (3, "Local Quality",
     "The Local Quality principle encourages changing the structure of an object or its "
     "environment from uniform to non-uniform, letting each part function under the "
     "conditions most suitable to its operation, and giving each part a different useful "
     "function."),
    (4, "Asymmetry",
     "The Asymmetry principle encourages replacing a symmetrical form with an asymmetrical "
     "one, and if an object is already asymmetrical, increasing its degree of asymmetry."),
    (5, "Combining",
     "The Combining principle encourages bringing identical or similar objects closer "
     "together or merging them in space, and making operations contiguous or parallel in "
     "time."),
    (6, "Universality",
     "The Universality principle encourages making one part or object perform multiple "
     "functions, thereby eliminating the need for other parts or objects."),
    (7, "Nesting",
     "The Nesting principle encourages placing one object inside another, which is in turn "
     "placed inside a third, and passing one part through a cavity of another part."),
    (8, "Counterweight",
     "The Counterweight principle encourages compensating for the weight of an object by "
     "joining it with other objects that provide lift, or by interaction with an "
     "environment providing aerodynamic, hydrodynamic, or buoyancy forces."),
    (9, "Prior Counteraction",
     "The Prior Counteraction principle encourages performing a counter-action in advance, "
     "or preloading an object with stresses that will oppose known harmful working "
     "stresses later."),
    (10, "Prior Action",
     "The Prior Action principle encourages performing required changes to an object fully "
     "or partially in advance, and pre-arranging objects so they can act from the most "
     "convenient position without time lost in delivery."),
    (11, "Cushion in Advance",
     "The Cushion in Advance principle encourages preparing emergency means beforehand to "
     "compensate for the relatively low reliability of an object."),
    (12, "Equipotentiality",
     "The Equipotentiality principle encourages changing working conditions so that an "
     "object need not be raised or lowered within a potential field."),
    (13, "Inversion",
     "The Inversion principle encourages implementing the opposite of the specified "
     "action, making movable parts fixed and fixed parts movable, and turning an object "
     "or process upside down."),
    (14, "Spheroidality",
     "The Spheroidality principle encourages replacing rectilinear parts with curved ones "
     "and flat surfaces with spherical ones, using rollers, balls, spirals, and domes, and "
     "moving from linear to rotary motion to exploit centrifugal forces."),
    (15, "Dynamicity",
     "The Dynamicity principle encourages allowing the characteristics of an object, its "
     "environment, or its process to change so as to be optimal at each stage of "
     "operation, and dividing an object into parts capable of movement relative to each "
     "other."),
    (16, "Partial or Excessive Action",
     "The Partial or Excessive Action principle encourages using slightly less or slightly "
     "more of an action when achieving exactly one hundred percent of the desired effect "
     "is hard, thereby simplifying the problem considerably."),
    (17, "Transition to a New Dimension",
     "The Transition to a New Dimension principle encourages moving an object in "
     "two- or three-dimensional space instead of along a line or within a plane, using "
     "multi-story or multi-layer arrangements, tilting or re-orienting the object, and "
     "using the reverse side of a given area."),
    (18, "Mechanical Vibration",
     "The Mechanical Vibration principle encourages setting an object into oscillation, "
     "increasing its frequency up to ultrasonic levels, using resonant frequencies and "
     "piezo-vibrators, and combining ultrasonic vibration with electromagnetic fields."),
    (19, "Periodic Action",
     "The Periodic Action principle encourages replacing a continuous action with periodic "
     "or pulsating actions, changing the frequency of an already periodic action, and "
     "using pauses between impulses to perform a different action."),
    (20, "Continuity of Useful Action",
     "The Continuity of Useful Action principle encourages carrying on work continuously "
     "with all parts of an object operating at full load, and eliminating idle or "
     "intermediate motions."),
    (21, "Rushing Through",
     "The Rushing Through principle encourages conducting a process, or its harmful or "
     "hazardous stages, at very high speed."),
    (22, "Convert Harm into Benefit",
     "The Convert Harm into Benefit principle encourages using harmful factors or "
     "environmental effects to achieve a positive effect, removing a harmful factor by "
     "combining it with another harmful factor, and amplifying a harmful factor to the "
     "point where it ceases to be harmful."),
    (23, "Feedback",
     "The Feedback principle encourages introducing feedback to improve a process or "
     "action, and changing the magnitude or influence of feedback that already exists."),
    (24, "Mediator",
     "The Mediator principle encourages using an intermediary carrier article or "
     "intermediary process, and temporarily merging an object with another object that is "
     "easy to remove afterwards."),
    (25, "Self-Service",
     "The Self-Service principle encourages making an object serve itself by performing "
     "auxiliary helpful functions, and using waste resources, energy, or substances."),
    (26, "Copying",
     "The Copying principle encourages using simplified and inexpensive copies instead of "
     "unavailable, expensive, or fragile objects, replacing an object or process with its "
     "optical copies, and changing the scale of those copies."),
    (27, "Cheap Short-Lived Objects",
     "The Cheap Short-Lived Objects principle encourages replacing an expensive object "
     "with a set of inexpensive objects, conceding certain qualities such as service "
     "life."),
    (28, "Mechanical Substitution",
     "The Mechanical Substitution principle encourages replacing mechanical means with "
     "sensory means such as optical, acoustic, or olfactory ones, using electric, "
     "magnetic, and electromagnetic fields to interact with the object, and moving from "
     "static to movable fields and from unstructured to structured ones."),
    (29, "Pneumatics and Hydraulics",
     "The Pneumatics and Hydraulics principle encourages using gas or liquid parts of an "
     "object instead of solid parts, for instance inflatable, hydrostatic, or "
     "hydro-reactive elements."),
    (30, "Flexible Shells and Thin Films",
     "The Flexible Shells and Thin Films principle encourages using flexible shells and "
     "thin films instead of three-dimensional structures, and isolating an object from "
     "its environment with them."),
    (31, "Porous Materials",
     "The Porous Materials principle encourages making an object porous or adding porous "
     "elements, and using the pores to introduce a useful substance or function."),
    (32, "Changing Color",
     "The Changing Color principle encourages altering the color or transparency of an "
     "object or its external environment, and using colored additives to improve the "
     "observability of things that are difficult to see."),
    (33, "Homogeneity",
     "The Homogeneity principle encourages making objects that interact with a primary "
     "object out of the same material, or a material with identical properties."),
    (34, "Discarding and Recovering",
     "The Discarding and Recovering principle encourages making portions of an object "
     "that have fulfilled their function go away by dissolving, evaporating, or "
     "discarding them, and conversely restoring consumable parts of an object directly "
     "during operation."),
    (35, "Transforming the Physical or Chemical State of an Object",
     "The Transforming the Physical or Chemical State of an Object principle encourages "
     "changing an object's aggregate state, density distribution, degree of flexibility, "
     "or temperature to obtain the desired behavior."),
    (36, "Phase Transitions",
     "The Phase Transitions principle encourages using phenomena that occur during phase "
     "transitions, such as volume change or the liberation and absorption of heat."),
    (37, "Thermal Expansion",
     "The Thermal Expansion principle encourages using the thermal expansion or "
     "contraction of materials, and combining materials with different coefficients of "
     "thermal expansion."),
    (38, "Inert Atmosphere",
     "The Inert Atmosphere principle encourages replacing a normal environment with an "
     "inert one, and carrying out a process in a vacuum or under neutral gases."),
    (39, "Strong Oxidants",
     "The Strong Oxidants principle encourages replacing common air with oxygen-enriched "
     "air or pure oxygen, exposing air or oxygen to ionizing radiation, and using "
     "ozonized oxygen."),
    (40, "Composite Materials",
     "The Composite Materials principle encourages changing from uniform materials to "
     "composite ones in which each component serves a particular functional "
     "requirement."),
]

# Classical 39x39 contradiction matrix.  MATRIX[improving][worsening] is a
# comma-separated principle list in cell order; missing keys are empty cells.
# Principle indexes here use the classical numbering (38 = strong oxidants,
# 39 = inert atmosphere); the renumbering swap below moves them to the
# shipped table's numbering.
MATRIX = {
    1: {3: "15,8,29,34", 5: "29,17,38,34", 7: "29,2,40,28", 9: "2,8,15,38",
        10: "8,10,18,37", 11: "10,36,37,40", 12: "10,14,35,40", 13: "1,35,19,39",
        14: "28,27,18,40", 15: "5,34,31,35", 17: "6,29,4,38", 18: "19,1,32",
        19: "35,12,34,31", 21: "12,36,18,31", 22: "6,2,34,19", 23: "5,35,3,31",
        24: "10,24,35", 25: "10,35,20,28", 26: "3,26,18,31", 27: "1,3,11,27",
        28: "28,27,35,26", 29: "28,35,26,18", 30: "22,21,18,27", 31: "22,35,31,39",
        32: "27,28,1,36", 33: "35,3,2,24", 34: "2,27,28,11", 35: "29,5,15,8",
        36: "26,30,36,34", 37: "28,29,26,32", 38: "26,35,18,19", 39: "35,3,24,37"},
    2: {4: "10,1,29,35", 6: "35,30,13,2", 8: "5,35,14,2", 10: "8,10,19,35",
        11: "13,29,10,18", 12: "13,10,29,14", 13: "26,39,1,40", 14: "28,2,10,27",
        16: "2,27,19,6", 17: "28,19,32,22", 18: "19,32,35", 20: "18,19,28,1",
        21: "15,19,18,22", 22: "18,19,28,15", 23: "5,8,13,30", 24: "10,15,35",
        25: "10,20,35,26", 26: "19,6,18,26", 27: "10,28,8,3", 28: "18,26,28",
        29: "10,1,35,17", 30: "2,19,22,37", 31: "35,22,1,39", 32: "28,1,9",
        33: "6,13,1,32", 34: "2,27,28,11", 35: "19,15,29", 36: "1,10,26,39",
        37: "25,28,17,15", 38: "2,26,35", 39: "1,28,15,35"},
    3: {1: "8,15,29,34", 5: "15,17,4", 7: "7,17,4,35", 9: "13,4,8",
        10: "17,10,4", 11: "1,8,35", 12: "1,8,10,29", 13: "1,8,15,34",
        14: "8,35,29,34", 15: "19", 17: "10,15,19", 18: "32", 19: "8,35,24",
        21: "1,35", 22: "7,2,35,39", 23: "4,29,23,10", 24: "1,24", 25: "15,2,29",
        26: "29,35", 27: "10,14,29,40", 28: "28,32,4", 29: "10,28,29,37",
        30: "1,15,17,24", 31: "17,15", 32: "1,29,17", 33: "15,29,35,4",
        34: "1,28,10", 35: "14,15,1,16", 36: "1,19,26,24", 37: "35,1,26,24",
        38: "17,24,26,16", 39: "14,4,28,29"},
    4: {2: "35,28,40,29", 6: "17,7,10,40", 8: "35,8,2,14", 10: "28,10",
        11: "1,14,35", 12: "13,14,15,7", 13: "39,37,35", 14: "15,14,28,26",
        16: "1,40,35", 17: "3,35,38,18", 18: "3,25", 21: "12,8", 22: "6,28",
        23: "10,28,24,35", 24: "24,26", 25: "30,29,14", 27: "15,29,28",
        28: "32,28,3", 29: "2,32,10", 30: "1,18", 32: "15,17,27", 33: "2,25",
        34: "3", 35: "1,35", 36: "1,26", 37: "26", 39: "30,14,7,26"},
    5: {1: "2,17,29,4", 3: "14,15,18,4", 7: "7,14,17,4", 9: "29,30,4,34",
        10: "19,30,35,2", 11: "10,15,36,28", 12: "5,34,29,4", 13: "11,2,13,39",
        14: "3,15,40,14", 15: "6,3", 17: "2,15,16", 18: "15,32,19,13",
        19: "19,32", 21: "19,10,32,18", 22: "15,17,30,26", 23: "10,35,2,39",
        24: "30,26", 25: "26,4", 26: "29,30,6,13", 27: "29,9", 28: "26,28,32,3",
        29: "2,32", 30: "22,33,28,1", 31: "17,2,18,39", 32: "13,1,26,24",
        33: "15,17,13,16", 34: "15,13,10,1", 35: "15,30", 36: "14,1,13",
        37: "2,36,26,18", 38: "14,30,28,23", 39: "10,26,34,2"},
    6: {2: "30,2,14,18", 4: "26,7,9,39", 10: "1,18,35,36", 11: "10,15,36,37",
        13: "2,38", 14: "40", 16: "2,10,19,30", 17: "35,39,38", 21: "17,32",
        22: "17,7,30", 23: "10,14,18,39", 24: "30,16", 25: "10,35,4,18",
        26: "2,18,40,4", 27: "32,35,40,4", 28: "26,28,32,3", 29: "2,29,18,36",
        30: "27,2,39,35", 31: "22,1,40", 32: "40,16", 33: "16,4", 34: "16",
        35: "15,16", 36: "1,18,36", 37: "2,35,30,18", 38: "23", 39: "10,15,17,7"},
    7: {1: "2,26,29,40", 3: "1,7,4,35", 5: "1,7,4,17", 9: "29,4,38,34",
        10: "15,35,36,37", 11: "6,35,36,37", 12: "1,15,29,4", 13: "28,10,1,39",
        14: "9,14,15,7", 15: "6,35,4", 17: "34,39,10,18", 18: "2,13,10",
        19: "35", 21: "35,6,13,18", 22: "7,15,13,16", 23: "36,39,34,10",
        24: "2,22", 25: "2,6,34,10", 26: "29,30,7", 27: "14,1,40,11",
        28: "25,26,28", 29: "25,28,2,16", 30: "22,21,27,35", 31: "17,2,40,1",
        32: "29,1,40", 33: "15,13,30,12", 34: "10", 35: "15,29", 36: "26,1",
        37: "29,26,4", 38: "35,34,16,24", 39: "10,6,2,34"},
    8: {2: "35,10,19,14", 3: "19,14", 4: "35,8,2,14", 10: "2,18,37",
        11: "24,35", 12: "7,2,35", 13: "34,28,35,40", 14: "9,14,17,15",
        16: "35,34,38", 17: "35,6,4", 21: "30,6", 23: "10,39,35,34",
        25: "35,16,32,18", 26: "35,3", 27: "2,35,16", 29: "35,10,25",
        30: "34,39,19,27", 31: "30,18,35,4", 32: "35", 34: "1", 36: "1,31",
        37: "2,17,26", 39: "35,37,10,2"},
    9: {1: "2,28,13,38", 3: "13,14,8", 5: "29,30,34", 7: "7,29,34",
        10: "13,28,15,19", 11: "6,18,38,40", 12: "35,15,18,34",
        13: "28,33,1,18", 14: "8,3,26,14", 15: "3,19,35,5", 17: "28,30,36,2",
        18: "10,13,19", 19: "8,15,35,38", 21: "19,35,38,2", 22: "14,20,19,35",
        23: "10,13,28,38", 24: "13,26", 26: "10,19,29,38", 27: "11,35,27,28",
        28: "28,32,1,24", 29: "10,28,32,25", 30: "1,28,35,23", 31: "2,24,35,21",
        32: "35,13,8,1", 33: "32,28,13,12", 34: "34,2,28,27", 35: "15,10,26",
        36: "10,28,4,34", 37: "3,34,27,16", 38: "10,18"},
    10: {1: "8,1,37,18", 2: "18,13,1,28", 3: "17,19,9,36", 4: "28,10",
         5: "19,10,15", 6: "1,18,36,37", 7: "15,9,12,37", 8: "2,36,18,37",
         9: "13,28,15,12", 11: "18,21,11", 12: "10,35,40,34", 13: "35,10,21",
         14: "35,10,14,27", 15: "19,2", 17: "35,10,21", 19: "19,17,10",
         20: "1,16,36,37", 21: "19,35,18,37", 22: "14,15", 23: "8,35,40,5",
         25: "10,37,36", 26: "14,29,18,36", 27: "3,35,13,21", 28: "35,10,23,24",
         29: "28,29,37,36", 30: "1,35,40,18", 31: "13,3,36,24", 32: "15,37,18,1",
         33: "1,28,3,25", 34: "15,1,11", 35: "15,17,18,20", 36: "26,35,10,18",
         37: "36,37,10,19", 38: "2,35", 39: "3,28,35,37"},
    11: {1: "10,36,37,40", 2: "13,29,10,18", 3: "35,10,36", 4: "35,1,14,16",
         5: "10,15,36,28", 6: "10,15,36,37", 7: "6,35,10", 8: "35,24",
         9: "6,35,36", 10: "36,35,21", 12: "35,4,15,10", 13: "35,33,2,40",
         14: "9,18,3,40", 15: "19,3,27", 17: "35,39,19,2", 19: "14,24,10,37",
         21: "10,35,14", 22: "2,36,25", 23: "10,36,3,37", 25: "37,36,4",
         26: "10,14,36", 27: "10,13,19,35", 28: "6,28,25", 29: "3,35",
         30: "22,2,37", 31: "2,33,27,18", 32: "1,35,16", 33: "11", 34: "2",
         35: "35", 36: "19,1,35", 37: "2,36,37", 38: "35,24", 39: "10,14,35,37"},
    12: {1: "8,10,29,40", 2: "15,10,26,3", 3: "29,34,5,4", 4: "13,14,10,7",
         5: "5,34,4,10", 7: "14,4,15,22", 8: "7,2,35", 9: "35,15,34,18",
         10: "35,10,37,40", 11: "34,15,10,14", 13: "33,1,18,4",
         14: "30,14,10,40", 15: "14,26,9,25", 17: "22,14,19,32", 18: "13,15,32",
         19: "2,6,34,14", 21: "4,6,2", 22: "14", 23: "35,29,3,5",
         25: "14,10,34,17", 26: "36,22", 27: "10,40,16", 28: "28,32,1",
         29: "32,30,40", 30: "22,1,2,35", 31: "35,1", 32: "1,32,17,28",
         33: "32,15,26", 34: "2,13,1", 35: "1,15,29", 36: "16,29,1,28",
         37: "15,13,39", 38: "15,1,32", 39: "17,26,34,10"},
    13: {1: "21,35,2,39", 2: "26,39,1,40", 3: "13,15,1,28", 4: "37",
         5: "2,11,13", 6: "39", 7: "28,10,19,39", 8: "34,28,35,40",
         9: "33,15,28,18", 10: "10,35,21,16", 11: "2,35,40", 12: "22,1,18,4",
         14: "17,9,15", 15: "13,27,10,35", 16: "39,3,35,23", 17: "35,1,32",
         18: "32,3,27,16", 19: "13,19", 20: "27,4,29,18", 21: "32,35,27,31",
         22: "14,2,39,6", 23: "2,14,30,40", 25: "35,27", 26: "15,32,35",
         28: "13", 29: "18", 30: "35,24,30,18", 31: "35,40,27,39", 32: "35,19",
         33: "32,35,30", 34: "2,35,10,16", 35: "35,30,34,2", 36: "2,35,22,26",
         37: "35,22,39,23", 38: "1,8,35", 39: "23,35,40,3"},
    14: {1: "1,8,40,15", 2: "40,26,27,1", 3: "1,15,8,35", 4: "15,14,28,26",
         5: "3,34,40,29", 6: "9,40,28", 7: "10,15,14,7", 8: "9,14,17,15",
         9: "8,13,26,14", 10: "10,18,3,14", 11: "10,3,18,40", 12: "10,30,35,40",
         13: "13,17,35", 15: "27,3,26", 17: "30,10,40", 18: "35,19",
         19: "19,35,10", 20: "35", 21: "10,26,35,28", 22: "35", 23: "35,28,31,40",
         25: "29,3,28,10", 26: "29,10,27", 27: "11,3", 28: "3,27,16", 29: "3,27",
         30: "18,35,37,1", 31: "15,35,22,2", 32: "11,3,10,32", 33: "32,40,28,2",
         34: "27,11,3", 35: "15,3,32", 36: "2,13,28", 37: "27,3,15,40", 38: "15",
         39: "29,35,10,14"},
    15: {1: "19,5,34,31", 3: "2,19,9", 5: "3,17,19", 7: "10,2,19,30",
         9: "3,35,5", 10: "19,2,16", 11: "19,3,27", 12: "14,26,28,25",
         13: "13,3,35", 14: "27,3,10", 17: "19,35,39", 18: "2,19,4,35",
         19: "28,6,35,18", 21: "19,10,35,38", 23: "28,27,3,18", 24: "10",
         25: "20,10,28,18", 26: "3,35,10,40", 27: "11,2,13", 28: "3",
         29: "3,27,16,40", 30: "22,15,33,28", 31: "21,39,16,22", 32: "27,1,4",
         33: "12,27", 34: "29,10,27", 35: "1,35,13", 36: "10,4,29,15",
         37: "19,29,39,35", 38: "6,10", 39: "35,17,14,19"},
    16: {2: "6,27,19,16", 4: "1,40,35", 8: "35,34,38", 13: "39,3,35,23",
         17: "19,18,36,40", 21: "16", 23: "27,16,18,38", 24: "10",
         25: "28,20,10,16", 26: "3,35,31", 27: "34,27,6,40", 28: "10,26,24",
         30: "17,1,40,33", 31: "22", 32: "35,10", 33: "1", 34: "1", 35: "2",
         37: "25,34,6,35", 38: "1", 39: "20,10,16,38"},
    17: {1: "36,22,6,38", 2: "22,35,32", 3: "15,19,9", 4: "15,19,9",
         5: "3,35,39,18", 6: "35,38", 7: "34,39,40,18", 8: "35,6,4",
         9: "2,28,36,30", 10: "35,10,3,21", 11: "35,39,19,2", 12: "14,22,19,32",
         13: "1,35,32", 14: "10,30,22,40", 15: "19,13,39", 16: "19,18,36,40",
         18: "32,30,21,16", 19: "19,15,3,17", 21: "2,14,17,25", 22: "21,17,35,38",
         23: "21,36,29,31", 25: "35,28,21,18", 26: "3,17,30,39", 27: "19,35,3,10",
         28: "32,19,24", 29: "24", 30: "22,33,35,2", 31: "22,35,2,24",
         32: "26,27", 33: "26,27", 34: "4,10,16", 35: "2,18,27", 36: "2,17,16",
         37: "3,27,35,31", 38: "26,2,19,16", 39: "15,28,35"},
    18: {1: "19,1,32", 2: "2,35,32", 3: "19,32,16", 5: "19,32,26",
         7: "2,13,10", 9: "10,13,19", 10: "26,19,6", 12: "32,30",
         13: "32,3,27", 14: "35,19", 15: "2,19,6", 17: "32,35,19",
         19: "32,1,19", 20: "32,35,1,15", 21: "32", 22: "13,16,1,6",
         23: "13,1", 24: "1,6", 25: "19,1,26,17", 26: "1,19",
         28: "11,15,32", 29: "3,32", 30: "15,19", 31: "35,19,32,39",
         32: "19,35,28,26", 33: "28,26,19", 34: "15,17,13,16", 35: "15,1,19",
         36: "6,32,13", 37: "32,15", 38: "2,26,10", 39: "2,25,16"},
    19: {1: "12,18,28,31", 3: "12,28", 5: "15,19,25", 7: "35,13,18",
         9: "8,15,35", 10: "16,26,21,2", 11: "23,14,25", 12: "12,2,29",
         13: "19,13,17,24", 14: "5,19,9,35", 15: "28,35,6,18", 17: "19,24,3,14",
         18: "2,15,19", 21: "6,19,37,18", 22: "12,22,15,24", 23: "35,24,18,5",
         25: "35,38,19,18", 26: "34,23,16,18", 27: "19,21,11,27", 28: "3,1,32",
         30: "1,35,6,27", 31: "2,35,6", 32: "28,26,30", 33: "19,35",
         34: "1,15,17,28", 35: "15,17,13,16", 36: "2,29,27,28", 37: "35,38",
         38: "32,2", 39: "12,28,35"},
    20: {1: "19,9,6,27", 10: "36,37", 13: "27,4,29,18", 18: "19,2,35,32",
         23: "28,27,18,31", 26: "3,35,31", 27: "10,36,23", 30: "10,2,22,37",
         31: "19,22,18", 32: "1,4", 37: "19,35,16,25", 39: "1,6"},
    21: {1: "8,36,38,31", 2: "19,26,17,27", 3: "1,10,35,37", 5: "19,38",
         6: "17,32,13,38", 7: "35,6,38", 8: "30,6,25", 9: "15,35,2",
         10: "26,2,36,35", 11: "22,10,35", 12: "29,14,2,40", 13: "35,32,15,31",
         14: "26,10,28", 15: "19,35,10,38", 16: "16", 17: "2,14,17,25",
         18: "16,6,19", 19: "16,6,19,37", 22: "10,35,38", 23: "28,27,18,38",
         24: "10,19", 25: "35,20,10,6", 26: "4,34,19", 27: "19,24,26,31",
         28: "32,15,2", 29: "32,2", 30: "19,22,31,2", 31: "2,35,18",
         32: "26,10,34", 33: "26,35,10", 34: "35,2,10,34", 35: "19,17,34",
         36: "20,19,30,34", 37: "19,35,16", 38: "28,2,17", 39: "28,35,34"},
    22: {1: "15,6,19,28", 2: "19,6,18,9", 3: "7,2,6,13", 4: "6,38,7",
         5: "15,26,17,30", 6: "17,7,30,18", 7: "7,18,23", 8: "7",
         9: "16,35,38", 10: "36,38", 13: "14,2,39,6", 14: "26",
         17: "19,38,7", 18: "1,13,32,15", 21: "3,38", 23: "35,27,2,37",
         24: "19,10", 25: "10,18,32,7", 26: "7,18,25", 27: "11,10,35",
         28: "32", 30: "21,22,35,2", 31: "21,35,2,22", 33: "35,32,1",
         34: "2,19", 36: "7,23", 37: "35,3,15,23", 38: "2", 39: "28,10,29,35"},
    23: {1: "35,6,23,40", 2: "35,6,22,32", 3: "14,29,10,39", 4: "10,28,24",
         5: "35,2,10,31", 6: "10,18,39,31", 7: "1,29,30,36", 8: "3,39,18,31",
         9: "10,13,28,38", 10: "14,15,18,40", 11: "3,36,37,10",
         12: "29,35,3,5", 13: "2,14,30,40", 14: "35,28,31,40",
         15: "28,27,3,18", 16: "27,16,18,38", 17: "21,36,39,31",
         18: "1,6,13", 19: "35,18,24,5", 20: "28,27,12,31", 21: "28,27,18,38",
         22: "35,27,2,31", 25: "15,18,35,10", 26: "6,3,10,24",
         27: "10,29,39,35", 28: "16,34,31,28", 29: "35,10,24,31",
         30: "33,22,30,40", 31: "10,1,34,29", 32: "15,34,33",
         33: "32,28,2,24", 34: "2,35,34,27", 35: "15,10,2", 36: "35,10,28,24",
         37: "35,18,10,13", 38: "35,10,18", 39: "28,35,10,23"},
    24: {1: "10,24,35", 2: "10,35,5", 3: "1,26", 4: "26", 5: "30,26",
         6: "30,16", 8: "2,22", 9: "26,32", 21: "10,19", 22: "19,10",
         25: "24,26,28,32", 26: "24,28,35", 27: "10,28,23", 30: "22,10,1",
         31: "10,21,22", 32: "32", 33: "27,22", 37: "35,33", 38: "35",
         39: "13,23,15"},
    25: {1: "10,20,37,35", 2: "10,20,26,5", 3: "15,2,29", 4: "30,24,14,5",
         5: "26,4,5,16", 6: "10,35,17,4", 7: "2,5,34,10", 8: "35,16,32,18",
         10: "10,37,36,5", 11: "37,36,4", 12: "4,10,34,17", 13: "35,3,22,5",
         14: "29,3,28,18", 15: "20,10,28,18", 16: "28,20,10,16",
         17: "35,29,21,18", 18: "1,19,26,17", 19: "35,38,19,18", 20: "1",
         21: "35,20,10,6", 22: "10,5,18,32", 23: "35,18,10,39",
         24: "24,26,28,32", 26: "35,38,18,16", 27: "10,30,4",
         28: "24,34,28,32", 29: "24,26,28,18", 30: "35,18,34",
         31: "35,22,18,39", 32: "35,28,34,4", 33: "4,28,10,34", 34: "32,1,10",
         35: "35,28", 36: "6,29", 37: "18,28,32,10", 38: "24,28,35,30"},
    26: {1: "35,6,18,31", 2: "27,26,18,35", 3: "29,14,35,18", 5: "15,14,29",
         6: "2,18,40,4", 7: "15,20,29", 9: "35,29,34,28", 10: "35,14,3",
         11: "10,36,14,3", 12: "35,14", 13: "15,2,17,40", 14: "14,35,34,10",
         15: "3,35,10,40", 16: "3,35,31", 17: "3,17,39", 19: "34,29,16,18",
         20: "3,35,31", 21: "35", 22: "7,18,25", 23: "6,3,10,24",
         24: "24,28,35", 25: "35,38,18,16", 27: "18,3,28,40", 28: "13,2,28",
         29: "33,30", 30: "35,33,29,31", 31: "3,35,40,39", 32: "29,1,35,27",
         33: "35,29,25,10", 34: "2,32,10,25", 35: "15,3,29", 36: "3,13,27,10",
         37: "3,27,29,18", 38: "8,35", 39: "13,29,3,27"},
    27: {1: "3,8,10,40", 2: "3,10,8,28", 3: "15,9,14,4", 4: "15,29,28,11",
         5: "17,10,14,16", 6: "32,35,40,4", 7: "3,10,14,24", 8: "2,35,24",
         9: "21,35,11,28", 10: "8,28,10,3", 11: "10,24,35,19", 12: "35,1,16,11",
         14: "11,28", 15: "2,35,3,25", 16: "34,27,6,40", 17: "3,35,10",
         18: "11,32,13", 19: "21,11,27,19", 20: "36,23", 21: "21,11,26,31",
         22: "10,11,35", 23: "10,35,29,39", 24: "10,28", 25: "10,30,4",
         26: "21,28,40,3", 28: "32,3,11,23", 29: "11,32,1", 30: "27,35,2,40",
         31: "35,2,40,26", 33: "27,17,40", 34: "1,11", 35: "13,35,8,24",
         36: "13,35,1", 37: "27,40,28", 38: "11,13,27", 39: "1,35,29,38"},
    28: {1: "32,35,26,28", 2: "28,35,25,26", 3: "28,26,5,16", 4: "32,28,3,16",
         5: "26,28,32,3", 6: "26,28,32,3", 7: "32,13,6", 9: "28,13,32,24",
         10: "32,2", 11: "6,28,32", 12: "6,28,32", 13: "32,35,13",
         14: "28,6,32", 15: "28,6,32", 16: "10,26,24", 17: "6,19,28,24",
         18: "6,1,32", 19: "3,6,32", 21: "3,6,32", 22: "26,32,27",
         23: "10,16,31,28", 25: "24,34,28,32", 26: "2,6,32", 27: "5,11,1,23",
         30: "28,24,22,26", 31: "3,33,39,10", 32: "6,35,25,18",
         33: "1,13,17,34", 34: "1,32,13,11", 35: "13,35,2", 36: "27,35,10,34",
         37: "26,24,32,28", 38: "28,2,10,34", 39: "10,34,28,32"},
    29: {1: "28,32,13,18", 2: "28,35,27,9", 3: "10,28,29,37", 4: "2,32,10",
         5: "28,33,29,32", 6: "2,29,18,36", 7: "32,28,2", 8: "25,10,35",
         9: "10,28,32", 10: "28,19,34,36", 11: "3,35", 12: "32,30,40",
         13: "30,18", 14: "3,27", 15: "3,27,40", 17: "19,26", 18: "3,32",
         19: "32,2", 21: "32,2", 22: "13,32,2", 23: "35,31,10,24",
         25: "32,26,28,18", 26: "32,30", 27: "11,32,1", 30: "26,28,10,36",
         31: "4,17,34,26", 33: "1,32,35,23", 34: "25,10", 36: "26,2,18",
         38: "26,28,18,23", 39: "10,18,32,39"},
    30: {1: "22,21,27,39", 2: "2,22,13,24", 3: "17,1,39,4", 4: "1,18",
         5: "22,1,33,28", 6: "27,2,39,35", 7: "22,23,37,35", 8: "34,39,19,27",
         9: "21,22,35,28", 10: "13,35,39,18", 11: "22,2,37", 12: "22,1,3,35",
         13: "35,24,30,18", 14: "18,35,37,1", 15: "22,15,33,28",
         16: "17,1,40,33", 17: "22,33,35,2", 18: "1,19,32,13",
         19: "1,24,6,27", 20: "10,2,22,37", 21: "19,22,31,2", 22: "21,22,35,2",
         23: "33,22,19,40", 24: "22,10,2", 25: "35,18,34", 26: "35,33,29,31",
         27: "27,24,2,40", 28: "28,33,23,26", 29: "26,28,10,18",
         32: "24,35,2", 33: "2,25,28,39", 34: "35,10,2", 35: "35,11,22,31",
         36: "22,19,29,40", 37: "22,19,29,40", 38: "33,3,34", 39: "22,35,13,24"},
    31: {1: "19,22,15,39", 2: "35,22,1,39", 3: "17,15,16,22", 5: "17,2,18,39",
         6: "22,1,40", 7: "17,2,40", 8: "30,18,35,4", 9: "35,28,3,23",
         10: "35,28,1,40", 11: "2,33,27,18", 12: "35,1", 13: "35,40,27,39",
         14: "15,35,22,2", 15: "15,22,33,31", 16: "21,39,16,22",
         17: "22,35,2,24", 18: "19,24,39,32", 19: "2,35,6", 20: "19,22,18",
         21: "2,35,18", 22: "21,35,2,22", 23: "10,1,34", 24: "10,21,29",
         25: "1,22", 26: "3,24,39,1", 27: "24,2,40,39", 28: "3,33,26",
         29: "4,17,34,26", 36: "19,1,31", 37: "2,21,27,1", 38: "2",
         39: "22,35,18,39"},
    32: {1: "28,29,15,16", 2: "1,27,36,13", 3: "1,29,13,17", 4: "15,17,27",
         5: "13,1,26,12", 6: "16,40", 7: "13,29,1,40", 8: "35", 9: "35,13,8,1",
         10: "35,12", 11: "35,19,1,37", 12: "1,28,13,27", 13: "11,13,1",
         14: "1,3,10,32", 15: "27,1,4", 16: "35,16", 17: "27,26,18",
         18: "28,24,27,1", 19: "28,26,27,1", 20: "1,4", 21: "27,1,12,24",
         22: "19,35", 23: "15,34,33", 24: "32,24,18,16", 25: "35,28,34,4",
         26: "35,23,1,24", 28: "1,35,12,18", 30: "24,2", 33: "2,5,13,16",
         34: "35,1,11,9", 35: "2,13,15", 36: "27,26,1", 37: "6,28,11,1",
         38: "8,28,1", 39: "35,1,10,28"},
    33: {1: "25,2,13,15", 2: "6,13,1,25", 3: "1,17,13,12", 5: "1,17,13,16",
         6: "18,16,15,39", 7: "1,16,35,15", 8: "4,18,39,31", 9: "18,13,34",
         10: "28,13,35", 11: "2,32,12", 12: "15,34,29,28", 13: "32,35,30",
         14: "32,40,28,2", 15: "29,3,8,25", 16: "1,16,25", 17: "26,27,13",
         18: "13,17,1,24", 19: "1,13,24", 21: "35,34,2,10", 22: "2,19,13",
         23: "28,32,2,24", 24: "4,10,27,22", 25: "4,28,10,34", 26: "12,35",
         27: "17,27,8,40", 28: "25,13,2,34", 29: "1,32,35,23",
         30: "2,25,28,39", 32: "2,5,12", 34: "12,26,1,32", 35: "15,34,1,16",
         36: "32,26,12,17", 38: "1,34,12,3", 39: "15,1,28"},
    34: {1: "2,27,35,11", 2: "2,27,35,11", 3: "1,28,10,25", 4: "3,18,31",
         5: "15,13,32", 6: "16,25", 7: "25,2,35,11", 8: "1", 9: "34,9",
         10: "1,11,10", 11: "13", 12: "1,13,2,4", 13: "2,35",
         14: "11,1,2,9", 15: "11,29,28,27", 16: "1", 17: "4,10",
         18: "15,1,13", 19: "15,1,28,16", 21: "15,10,32,2", 22: "15,1,32,19",
         23: "2,35,34,27", 25: "32,1,10,25", 26: "2,28,10,25",
         27: "11,10,1,16", 28: "10,2,13", 29: "25,10", 30: "35,10,2,16",
         32: "1,35,11,10", 33: "1,12,26,15", 35: "7,1,4,16", 36: "35,1,13,11",
         38: "34,35,7,13", 39: "1,32,10"},
    35: {1: "1,6,15,8", 2: "19,15,29,16", 3: "35,1,29,2", 4: "1,35,16",
         5: "35,30,29,7", 6: "15,16", 7: "15,35,29", 9: "35,10,14",
         10: "15,17,20", 11: "35,16", 12: "15,37,1,8", 13: "35,30,14",
         14: "35,3,32,6", 15: "13,1,35", 16: "2,16", 17: "27,2,3,35",
         18: "6,22,26,1", 19: "19,35,29,13", 21: "19,1,29", 22: "18,15,1",
         23: "15,10,2,13", 25: "35,28", 26: "3,35,15", 27: "35,13,8,24",
         28: "35,5,1,10", 30: "35,11,32,31", 32: "1,13,31", 33: "15,34,1,16",
         34: "1,16,7,4", 36: "15,29,37,28", 37: "1", 38: "27,34,35",
         39: "35,28,6,37"},
    36: {1: "26,30,34,36", 2: "2,26,35,39", 3: "1,19,26,24", 4: "26",
         5: "14,1,13,16", 6: "6,36", 7: "34,26,6", 8: "1,16", 9: "34,10,28",
         10: "26,16", 11: "19,1,35", 12: "29,13,28,15", 13: "2,22,17,19",
         14: "2,13,28", 15: "10,4,28,15", 17: "2,17,13", 18: "24,17,13",
         19: "27,2,29,28", 21: "20,19,30,34", 22: "10,35,13,2",
         23: "35,10,28,29", 25: "6,29", 26: "13,3,27,10", 27: "13,35,1",
         28: "2,26,10,34", 29: "26,24,32", 30: "22,19,29,40", 31: "19,1",
         32: "27,26,1,13", 33: "27,9,26,24", 34: "1,13", 35: "29,15,28,37",
         37: "15,10,37,28", 38: "15,1,24", 39: "12,17,28"},
    37: {1: "27,26,28,13", 2: "6,13,28,1", 3: "16,17,26,24", 4: "26",
         5: "2,13,18,17", 6: "2,39,30,16", 7: "29,1,4,16", 8: "2,18,26,31",
         9: "3,4,16,35", 10: "36,28,40,19", 11: "35,36,37,32",
         12: "27,13,1,39", 13: "11,22,39,30", 14: "27,3,15,28",
         15: "19,29,39,25", 16: "25,34,6,35", 17: "3,27,35,16",
         18: "2,24,26", 19: "35,38", 20: "19,35,16", 21: "18,1,16,10",
         22: "35,3,15,19", 23: "1,18,10,24", 24: "35,33,27,22",
         25: "18,28,32,9", 26: "3,27,29,18", 27: "27,40,28,8",
         28: "26,24,32,28", 30: "22,19,29,28", 31: "2,21", 32: "5,28,11,29",
         33: "2,5", 34: "12,26", 35: "1,15", 36: "15,10,37,28", 38: "34,21",
         39: "35,18"},
    38: {1: "28,26,18,35", 2: "28,26,35,10", 3: "14,13,17,28", 4: "23",
         5: "17,14,13", 7: "35,13,16", 9: "28,10", 10: "2,35", 11: "13,35",
         12: "15,32,1,13", 13: "18,1", 14: "25,13", 15: "6,9",
         17: "26,2,19", 18: "8,32,19", 19: "2,32,13", 21: "28,2,27",
         22: "23,28", 23: "35,10,18,5", 24: "35,33", 25: "24,28,35,30",
         26: "35,13", 27: "11,27,32", 28: "28,26,10,34", 29: "28,26,18,23",
         30: "2,33", 31: "2", 32: "1,26,13", 33: "1,12,34,3", 34: "1,35,13",
         35: "27,4,1,35", 36: "15,24,10", 37: "34,27,25", 39: "5,12,35,26"},
    39: {1: "35,26,24,37", 2: "28,27,15,3", 3: "18,4,28,38", 4: "30,7,14,26",
         5: "10,26,34,31", 6: "10,35,17,7", 7: "2,6,34,10", 8: "35,37,10,2",
         10: "28,15,10,36", 11: "10,37,14", 12: "14,10,34,40", 13: "35,3,22,39",
         14: "29,28,10,18", 15: "35,10,2,18", 16: "20,10,16,38",
         17: "35,21,28,10", 18: "26,17,19,1", 19: "35,10,38,19", 20: "1",
         21: "35,20,10", 22: "28,10,29,35", 23: "28,10,35,23", 24: "13,15,23",
         26: "35,38", 27: "1,35,10,38", 28: "1,10,34,28", 29: "18,10,32,1",
         30: "22,35,13,24", 31: "35,22,18,39", 32: "35,28,2,24",
         33: "1,28,7,19", 34: "1,32,10,25", 35: "1,35,28,37", 36: "12,17,28,24",
         37: "35,18,27,2", 38: "5,12,35,26"},
}

# classical numbering -> shipped numbering (strong oxidants 38 -> 39,
# inert atmosphere 39 -> 38)
SWAP = {38: 39, 39: 38}


def main():
    OUT.mkdir(parents=True, exist_ok=True)

    params = [{"index": i, "title": t, "description": d} for i, t, d in PARAMETERS]
    principles = [{"index": i, "title": t, "description": d} for i, t, d in PRINCIPLES]

    cells = []
    for imp in range(1, 40):
        row = MATRIX.get(imp, {})
        for wor in range(1, 40):
            if wor == imp or wor not in row:
                continue
            plist = [int(x) for x in row[wor].split(",")]
            plist = [SWAP.get(p, p) for p in plist]
            assert all(1 <= p <= 40 for p in plist), (imp, wor, plist)
            cells.append({"improving": imp, "worsening": wor, "principles": plist})

    lookup = {(c["improving"], c["worsening"]): c["principles"] for c in cells}
    assert lookup[(6, 13)] == [2, 39], lookup[(6, 13)]
    assert lookup[(9, 13)] == [28, 33, 1, 18], lookup[(9, 13)]
    assert {7, 17} <= set(lookup[(6, 22)]), lookup[(6, 22)]
    assert {14} <= set(lookup[(12, 22)]), lookup[(12, 22)]
    assert {35} <= set(lookup[(39, 6)]), lookup[(39, 6)]
    assert len(params) == 39 and len(principles) == 40

    (OUT / "parameters.json").write_text(json.dumps(params, indent=1) + "\n")
    (OUT / "principles.json").write_text(json.dumps(principles, indent=1) + "\n")
    (OUT / "matrix.json").write_text(json.dumps(cells, indent=1) + "\n")
    print(f"wrote {len(params)} parameters, {len(principles)} principles, "
          f"{len(cells)} matrix cells")


if __name__ == "__main__":
    main()
