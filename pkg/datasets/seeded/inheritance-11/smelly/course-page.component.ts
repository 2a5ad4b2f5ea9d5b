import { Component, Injectable } from '@angular/core';
import { BaseCoursePageComponent } from './base-course-page';

@Component({
  selector: 'app-course-page',
  template: `<h1>{{ pageTitle }}</h1>`
})
export class CoursePageComponent extends BaseCoursePageComponent {
  pageTitle = 'Course Page';
}
