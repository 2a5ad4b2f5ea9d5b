import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-course-header', template: `<p>{{ title }}</p>` })
export class CourseHeaderComponent { title = 'Course header'; }
