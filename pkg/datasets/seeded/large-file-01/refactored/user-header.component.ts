import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-user-header', template: `<p>{{ title }}</p>` })
export class UserHeaderComponent { title = 'User header'; }
