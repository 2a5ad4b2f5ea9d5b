import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-course-footer', template: `<p>{{ title }}</p>` })
export class CourseFooterComponent { title = 'Course footer'; }
